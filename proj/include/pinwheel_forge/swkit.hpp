#pragma once

#include "pinwheel_forge/zlin.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pwf::sw {

using zlin::Int;

// Coordinates (a; b_1..b_{r-1}) stand for a h - sum b_i e_i, with h^2 = 1 and
// e_i^2 = -1. Surfaces use the same coordinates.
using Coeffs = std::vector<long>;

struct OddLattice {
    int rank = 1;

    explicit OddLattice(int r);
    long pair(const Coeffs& x, const Coeffs& y) const;
    long square(const Coeffs& x) const { return pair(x, x); }
    // Signature 2 - rank.
    long signature() const { return 2 - rank; }
};

struct CharClass {
    Coeffs coeffs;

    bool operator==(const CharClass&) const = default;
    bool operator<(const CharClass& o) const { return coeffs < o.coeffs; }
    CharClass operator-() const;
};

bool is_characteristic(const CharClass& c);

struct AdjConstraint {
    Coeffs surface;
    int genus = 0;
};

struct BasicClassSearch {
    std::vector<CharClass> classes;  // sorted, closed under negation
    std::vector<std::string> warnings;
};

// All characteristic kappa in the box |coeff| <= bound with kappa^2 = c_square
// and |kappa.S| + S.S <= 2g - 2 for each constraint. Throws
// PreconditionError for empty constraints, bound < 1 or mismatched ranks.
BasicClassSearch enumerate_basic_classes(const OddLattice& lat, const std::vector<AdjConstraint>& constraints,
                                         long c_square, long bound = 5);

// Constraint sets used for CP2#3CP2bar and CP2#2CP2bar families, with the
// expected kappa^2 = 3 sign + 2 e.
struct ShippedCase {
    OddLattice lattice;
    std::vector<AdjConstraint> constraints;
    long c_square;
};
ShippedCase basic_class_case(std::string_view name);  // "k2" or "k3"

struct MinimalityResult {
    bool minimal = true;
    // (kappa, kappa') with (kappa - kappa')^2 = -4 when not minimal.
    std::optional<std::array<CharClass, 2>> witness;
    // Distinct values of (kappa - kappa')^2 over ordered pairs of distinct classes.
    std::vector<long> difference_squares;
};

// Closes the class list under negation before testing.
MinimalityResult minimality_check(const OddLattice& lat, const std::vector<CharClass>& classes);

// "3h - e1 - e2 - e3". rank 0 infers the smallest rank that fits.
CharClass parse_class(std::string_view text, int rank = 0);
std::string to_string(const CharClass& c);

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Int& constant);
    static LaurentPoly monomial(const Int& coeff, long exp);

    const std::map<long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(long exp) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const Int& s) const;
    bool operator==(const LaurentPoly&) const = default;

private:
    void add_term(long exp, const Int& c);
    std::map<long, Int> terms_;  // no zero coefficients
};

// Sums of c*t^k terms: "t^-1 - t", "2*t^3 - 5 + 2t^-3", "0".
LaurentPoly parse_laurent(std::string_view text);
std::string to_string(const LaurentPoly& p);

LaurentPoly mms_family(const LaurentPoly& f_infty, const LaurentPoly& f_zero, const Int& n);
Int distinguishing_invariant(const LaurentPoly& f);
// The four values s1 + s2 n.
std::array<Int, 4> sign_choices(const Int& n);

enum class TorusKind { Nullhomologous, CurveNullhomologous };

// Throws PreconditionError when gcd(p,q) != 1 or the case is not covered.
std::vector<Int> surgery_h1(const std::vector<Int>& h1_factors, const Int& p, const Int& q, TorusKind kind);

struct FeasibilityReport {
    int k = 0;
    int surgered_components = 0;
    int required = 0;
    int lower_bound = 0;
    bool feasible = false;
    int technique_bound = 3;
    bool within_technique_bound = false;
};

// Throws PreconditionError unless 2 <= k <= 9 and surgered_components >= 1.
FeasibilityReport canonical_genus_feasibility(int k, int surgered_components);

}  // namespace pwf::sw

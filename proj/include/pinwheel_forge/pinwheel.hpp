#pragma once

#include "pinwheel_forge/zlin.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pwf::pinwheel {

using zlin::Int;
using zlin::MatZ2;
using zlin::Rational;

MatZ2 gluing_phi();
MatZ2 gluing_alpha(const Int& m);
MatZ2 gluing_beta(const Int& n);
MatZ2 theta(const Int& a);

enum class MonodromyKind { PlusId, MinusId, Neither };

struct MonodromyResult {
    MonodromyKind kind = MonodromyKind::Neither;
    MatZ2 product;

    bool closes() const { return kind != MonodromyKind::Neither; }
};

// Classifies theta(a_k) * ... * theta(a_1).
MonodromyResult monodromy_check(const std::vector<Int>& a_seq);

std::string to_string(MonodromyKind k);

// Point of the rational projective line; one infinity.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(const Rational& v) : value_(v) {}
    ExtRational(const Int& v) : value_(v) {}
    ExtRational(long long v) : value_(v) {}

    static ExtRational infinity() {
        ExtRational r;
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }
    // Undefined for infinity.
    const Rational& value() const { return value_; }

    ExtRational reciprocal() const;
    // x - y; infinity absorbs everything except infinity - infinity, which
    // cannot arise from continued fraction evaluation and is rejected.
    ExtRational operator-(const ExtRational& y) const;

    bool operator==(const ExtRational& o) const {
        return inf_ == o.inf_ && (inf_ || value_ == o.value_);
    }
    bool operator!=(const ExtRational& o) const { return !(*this == o); }

    std::string str() const;

private:
    bool inf_ = false;
    Rational value_{0};
};

// c_1 - 1/(c_2 - 1/(... - 1/c_p)); empty list is infinity.
ExtRational continued_fraction(const std::vector<Int>& c_seq);

// [a_1..a_{k-1}], [a_2..a_k], ... : k values, each omitting one term.
std::vector<ExtRational> cyclic_continued_fractions(const std::vector<Int>& a_seq);

// Throws PreconditionError for k < 3.
bool cyclic_cf_all_zero(const std::vector<Int>& a_seq);

struct InterfaceSurface {
    int genus = 0;
    std::optional<Int> self_int;
};

struct PinwheelComponent {
    std::string name;
    InterfaceSurface s;
    InterfaceSurface t;
    long euler = 0;
    bool htc_at_t = false;
    bool push_through_eligible = false;
    int surgered_bing_pairs = 0;
    // Name once both interfaces are tori; empty keeps the current name.
    std::string traded_name;
};

struct Certification {
    enum class Kind { Matrix, External };
    Kind kind = Kind::Matrix;
    std::string cite;
};

struct TargetInvariants {
    long euler = 0;
    long b_plus = 0;
    long b_minus = 0;
    long b1 = 0;

    bool operator==(const TargetInvariants&) const = default;
};

struct Pinwheel {
    std::string name;
    std::vector<PinwheelComponent> components;
    Certification certification;
    TargetInvariants target;
    std::optional<int> surgered_pairs;
    // False when the component data is available only as a diagram.
    bool complete = true;
    std::string note;
    // Known pieces of incomplete entries.
    std::vector<PinwheelComponent> partial_components;

    long euler_sum() const;
};

struct ValidationItem {
    std::string check;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    std::optional<MonodromyResult> monodromy;
    long euler_sum = 0;

    bool passed() const;
    const ValidationItem* failure() const;
};

// a_i = n_i + m_{i+1} with n_i = T_i self-intersection, m_i = S_i
// self-intersection. Throws PreconditionError if any value is unknown.
std::vector<Int> interface_sequence(const Pinwheel& p);

// Incomplete entries yield a single failing "complete" item.
ValidationReport validate_pinwheel(const Pinwheel& p);

// Trades handles across the interface T_i -> S_{i+1}. Requires both surfaces
// of genus 0 and the HTC flag on component i.
Pinwheel trade_interface(const Pinwheel& p, std::size_t i);

// Trades at every interface. Requires every interface genus 0 and HTC at
// every T_i; errors name the first offending interface.
Pinwheel handle_trade(const Pinwheel& p);

// Pushes handles through an eligible component; both of its interfaces end
// up genus 1.
Pinwheel push_through(const Pinwheel& p, std::size_t component_index);

struct SurgeryInvariants {
    long b1 = 0;
    long b_plus = 0;
    long b_minus = 0;
    long euler = 2;
    long signature = 0;

    static SurgeryInvariants from_betti(long b1, long b_plus, long b_minus);
    bool consistent() const;
    bool operator==(const SurgeryInvariants&) const = default;
};

SurgeryInvariants torus_surgery(const SurgeryInvariants& inv);
// Each Bing pair is two torus surgeries.
SurgeryInvariants apply_standard_surgeries(const SurgeryInvariants& inv, int bing_pairs);

const std::vector<std::string>& catalog_names();
// Throws PreconditionError for unknown names.
Pinwheel catalog_lookup(std::string_view name);

nlohmann::ordered_json to_json(const Pinwheel& p);
Pinwheel pinwheel_from_json(const nlohmann::json& j);

}  // namespace pwf::pinwheel

#pragma once

#include "pinwheel_forge/zlin.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pwf::fpg {

using zlin::Int;

struct Letter {
    int gen = 0;
    long exp = 0;  // nonzero

    bool operator==(const Letter&) const = default;
};

// Freely reduced word: no zero exponents, no two adjacent letters on the same
// generator.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word gen(int g, long exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // Sum of |exponent|.
    std::size_t length() const;

    Word inverse() const;
    Word pow(long n) const;
    Word operator*(const Word& o) const;
    bool operator==(const Word&) const = default;

    // One generator index per unit letter, inverses encoded as -(g+1).
    std::vector<int> expanded() const;

private:
    std::vector<Letter> letters_;
};

Word free_reduce(const std::vector<Letter>& letters);

enum class CommutatorConvention {
    UVUinvVinv,  // [u,v] = u v u^-1 v^-1
    UinvVinvUV,  // [u,v] = u^-1 v^-1 u v
};

Word commutator(const Word& u, const Word& v, CommutatorConvention conv = CommutatorConvention::UVUinvVinv);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    // -1 if absent.
    int index_of(std::string_view name) const;
};

// Grammar (whitespace and '#' comments ignored):
//   presentation := 'gens' ':' ident+ ';' 'rels' ':' [relation (',' relation)*]
//   relation := word ['=' word]          (u = v gives the relator u v^-1)
//   word := term+ | '1'
//   term := atom ['^' int] ['*']
//   atom := ident | '[' word ',' word ']' | '(' word ')'
// Throws ParseError with 1-based line/column.
Presentation parse_presentation(std::string_view text,
                                CommutatorConvention conv = CommutatorConvention::UVUinvVinv);

std::string to_string(const Word& w, const std::vector<std::string>& names);
// Canonical DSL text; parse_presentation(to_dsl(p)) == p.
std::string to_dsl(const Presentation& p);

// Invariant factors of H_1: nonunit torsion orders then 0 per free summand.
std::vector<Int> abelianization(const Presentation& p);

struct EnumResult {
    enum class Status { Finite, Inconclusive };
    Status status = Status::Inconclusive;
    std::size_t order = 0;        // live cosets when finite
    std::size_t cosets_used = 0;  // total cosets defined
    std::size_t limit = 0;

    bool trivial() const { return status == Status::Finite && order == 1; }
};

// Coset enumeration over the trivial subgroup (HLT with deduction
// processing). Throws PreconditionError if max_cosets < 1.
EnumResult todd_coxeter(const Presentation& p, std::size_t max_cosets);

// 10^6 unless PINWHEEL_FORGE_MAX_COSETS holds a positive integer.
std::size_t default_max_cosets();

struct FamilyParams {
    int k = 3;
    long n = 1;
    long kappa = 0;
    CommutatorConvention conv = CommutatorConvention::UVUinvVinv;
    // Adds eta, xi as generators with defining relators instead of
    // expanding them in place (k = 2, 4).
    bool xi_as_generators = false;
    // Write the twisted relation as b [a^-1,b']^n = 1 instead of
    // b = [b',a^-1]^n.
    bool twist_as_product = false;
};

// Only the k = 2 and k = 4 families depend on kappa.
bool family_uses_kappa(int k);

// The relation text fed to the parser, one relation per line.
std::string family_presentation_text(const FamilyParams& params);
// Throws PreconditionError for unsupported k or n < 1.
Presentation build_family_presentation(const FamilyParams& params);

struct TrivialityResult {
    enum class Kind { Trivial, NontrivialH1, NontrivialFinite, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::vector<Int> h1;
    EnumResult enumeration;
};

TrivialityResult verify_trivial(const Presentation& p, std::size_t max_cosets);

std::string to_string(TrivialityResult::Kind k);

}  // namespace pwf::fpg

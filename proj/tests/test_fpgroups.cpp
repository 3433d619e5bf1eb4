#include "doctest.h"

#include "pinwheel_forge/errors.hpp"
#include "pinwheel_forge/fpgroups.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace pwf::fpg;
using pwf::ParseError;
using pwf::PreconditionError;
using testsupport::uniform;

namespace {

constexpr std::size_t kLimit = 200000;

std::size_t order_of(const std::string& text) {
    auto r = todd_coxeter(parse_presentation(text), kLimit);
    REQUIRE(r.status == EnumResult::Status::Finite);
    return r.order;
}

Word random_word(int gens, int max_len) {
    std::vector<Letter> ls;
    const long len = uniform(0, max_len);
    for (long i = 0; i < len; ++i) {
        long e = uniform(-3, 3);
        if (e == 0) e = 1;
        ls.push_back({static_cast<int>(uniform(0, gens - 1)), e});
    }
    return Word(ls);
}

// Independent reduction over unit letters, for comparison.
std::vector<int> naive_reduce(const std::vector<int>& codes) {
    std::vector<int> st;
    for (int c : codes) {
        int inv = c >= 0 ? -(c + 1) : -c - 1;
        if (!st.empty() && st.back() == inv)
            st.pop_back();
        else
            st.push_back(c);
    }
    return st;
}

std::vector<int> codes_of(const std::vector<Letter>& ls) {
    std::vector<int> out;
    for (const auto& l : ls)
        for (long i = 0; i < std::labs(l.exp); ++i) out.push_back(l.exp > 0 ? l.gen : -(l.gen + 1));
    return out;
}

}  // namespace

TEST_CASE("free reduction") {
    Word a = Word::gen(0), b = Word::gen(1);
    CHECK((a * a.inverse()).empty());
    CHECK((a * b * b.inverse() * a).letters() == std::vector<Letter>{{0, 2}});
    CHECK(a.pow(3).length() == 3);
    CHECK((a * b).pow(-2) == b.inverse() * a.inverse() * b.inverse() * a.inverse());
    CHECK(Word::gen(2, 0).empty());
    CHECK((a * b).expanded() == std::vector<int>{0, 1});
    CHECK(b.inverse().expanded() == std::vector<int>{-2});
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> ls;
        const long len = uniform(0, 12);
        for (long i = 0; i < len; ++i) ls.push_back({static_cast<int>(uniform(0, 2)), uniform(-2, 2)});
        Word w(ls);
        CHECK(w.expanded() == naive_reduce(codes_of(ls)));
        CHECK((w * w.inverse()).empty());
    }
}

TEST_CASE("commutator conventions") {
    Word a = Word::gen(0), b = Word::gen(1);
    CHECK(commutator(a, b) == a * b * a.inverse() * b.inverse());
    CHECK(commutator(a, b, CommutatorConvention::UinvVinvUV) == a.inverse() * b.inverse() * a * b);
    CHECK(commutator(a, b).inverse() == commutator(b, a));
    CHECK(commutator(a, a).empty());
}

TEST_CASE("presentation parsing") {
    auto p = parse_presentation("gens: a b ; rels: a^3, b = a^-1 b a, [a,b]^2 # comment\n, (a b)^2 * a, 1");
    REQUIRE(p.generators == std::vector<std::string>{"a", "b"});
    REQUIRE(p.relators.size() == 5);
    CHECK(p.relators[0] == Word::gen(0, 3));
    CHECK(p.relators[1] == Word::gen(1) * Word::gen(0, -1) * Word::gen(1, -1) * Word::gen(0));
    CHECK(p.relators[2] == commutator(Word::gen(0), Word::gen(1)).pow(2));
    CHECK(p.relators[3] == (Word::gen(0) * Word::gen(1)).pow(2) * Word::gen(0));
    CHECK(p.relators[4].empty());
    CHECK(p.index_of("b") == 1);
    CHECK(p.index_of("c") == -1);

    auto q = parse_presentation("gens: x ; rels:");
    CHECK(q.relators.empty());
    auto alt = parse_presentation("gens: a b ; rels: [a,b]", CommutatorConvention::UinvVinvUV);
    CHECK(alt.relators[0] == commutator(Word::gen(0), Word::gen(1), CommutatorConvention::UinvVinvUV));
}

TEST_CASE("parse errors carry line and column") {
    struct Case {
        const char* text;
        int line, col;
    };
    for (const Case& c : {Case{"gens: a ; rels: b", 1, 17}, Case{"gens: a ;\nrels: a^", 2, 9},
                          Case{"gens: a a ; rels:", 1, 9}, Case{"gens a ; rels:", 1, 6},
                          Case{"gens: a ; rels: [a a]", 1, 21}, Case{"gens: a ; rels: a,\n\n  (a", 3, 5},
                          Case{"gens: a ; rels: a ?", 1, 19}}) {
        INFO(c.text);
        try {
            parse_presentation(c.text);
            FAIL("expected parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == c.line);
            CHECK(e.column() == c.col);
        }
    }
}

TEST_CASE("printing and parsing round trip") {
    for (int trial = 0; trial < 300; ++trial) {
        Presentation p;
        const int ng = static_cast<int>(uniform(1, 4));
        for (int g = 0; g < ng; ++g) p.generators.push_back("g" + std::to_string(g));
        const long nr = uniform(0, 5);
        for (long r = 0; r < nr; ++r) p.relators.push_back(random_word(ng, 6));
        auto text = to_dsl(p);
        auto back = parse_presentation(text);
        CHECK(back.generators == p.generators);
        CHECK(back.relators == p.relators);
        CHECK(to_dsl(back) == text);
    }
}

TEST_CASE("abelianization") {
    CHECK(abelianization(parse_presentation("gens: a ; rels: a^6")) == std::vector<Int>{6});
    CHECK(abelianization(parse_presentation("gens: a b ; rels:")) == std::vector<Int>{0, 0});
    CHECK(abelianization(parse_presentation("gens: a b ; rels: a^2, b^4")) == std::vector<Int>{2, 4});
    CHECK(abelianization(parse_presentation("gens: a b ; rels: a^2, b^3")) == std::vector<Int>{6});
    CHECK(abelianization(parse_presentation("gens: a b ; rels: [a,b]")) == std::vector<Int>{0, 0});
    CHECK(abelianization(parse_presentation("gens: a b ; rels: a b^-1")) == std::vector<Int>{0});
    CHECK(abelianization(parse_presentation("gens: a b ; rels: a, b")).empty());
}

TEST_CASE("coset enumeration of cyclic groups") {
    for (int m = 1; m <= 12; ++m) {
        auto p = parse_presentation("gens: a ; rels: a^" + std::to_string(m));
        auto r = todd_coxeter(p, kLimit);
        CHECK(r.status == EnumResult::Status::Finite);
        CHECK(r.order == static_cast<std::size_t>(m));
        auto v = verify_trivial(p, kLimit);
        CHECK(v.kind == (m == 1 ? TrivialityResult::Kind::Trivial : TrivialityResult::Kind::NontrivialH1));
    }
}

TEST_CASE("coset enumeration of known finite groups") {
    for (int n = 2; n <= 10; ++n)
        CHECK(order_of("gens: r s ; rels: r^" + std::to_string(n) + ", s^2, (s r)^2") ==
              static_cast<std::size_t>(2 * n));
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            CHECK(order_of("gens: x y ; rels: x^" + std::to_string(a) + ", y^" + std::to_string(b) + ", [x,y]") ==
                  static_cast<std::size_t>(a * b));
    CHECK(order_of("gens: i j ; rels: i^4, i^2 = j^2, j i j^-1 i") == 8);
    CHECK(order_of("gens: a b ; rels: a^2, b^3, (a b)^3") == 12);
    CHECK(order_of("gens: a b ; rels: a^2, b^3, (a b)^4") == 24);
    CHECK(order_of("gens: a b ; rels: a^2, b^3, (a b)^5") == 60);
    CHECK(order_of("gens: a b ; rels: a^2, b^3, (a b)^7, [a,b]^4") == 168);
}

TEST_CASE("verify_trivial distinguishes the outcomes") {
    // Perfect group of order 120.
    auto binary = verify_trivial(parse_presentation("gens: s t ; rels: (s t)^2 = s^3, s^3 = t^5"), kLimit);
    CHECK(binary.kind == TrivialityResult::Kind::NontrivialFinite);
    CHECK(binary.h1.empty());
    CHECK(binary.enumeration.order == 120);

    // A balanced presentation of the trivial group.
    auto t1 = verify_trivial(parse_presentation("gens: a b ; rels: b^-1 a b = a^2, a^-1 b a = b^2"), kLimit);
    CHECK(t1.kind == TrivialityResult::Kind::Trivial);
    CHECK(t1.enumeration.order == 1);

    auto z2 = verify_trivial(parse_presentation("gens: a b ; rels: [a,b]"), kLimit);
    CHECK(z2.kind == TrivialityResult::Kind::NontrivialH1);
    CHECK(z2.h1 == std::vector<Int>{0, 0});
    CHECK(to_string(TrivialityResult::Kind::Inconclusive) == "Inconclusive");
}

TEST_CASE("bounded enumeration never claims nontriviality") {
    // Infinite group with trivial abelianization is out of reach; an infinite
    // cyclic group run through todd_coxeter alone hits the limit.
    auto r = todd_coxeter(parse_presentation("gens: a ; rels:"), 500);
    CHECK(r.status == EnumResult::Status::Inconclusive);
    CHECK(r.cosets_used == 500);
    CHECK(r.limit == 500);
    // The binary icosahedral group needs more than 50 cosets.
    auto v = verify_trivial(parse_presentation("gens: s t ; rels: (s t)^2 = s^3, s^3 = t^5"), 50);
    CHECK(v.kind == TrivialityResult::Kind::Inconclusive);
    CHECK_THROWS_AS(todd_coxeter(parse_presentation("gens: a ; rels: a"), 0), PreconditionError);
}

TEST_CASE("coset limit from the environment") {
    ::setenv("PINWHEEL_FORGE_MAX_COSETS", "1234", 1);
    CHECK(default_max_cosets() == 1234);
    ::setenv("PINWHEEL_FORGE_MAX_COSETS", "12x", 1);
    CHECK(default_max_cosets() == 1000000);
    ::setenv("PINWHEEL_FORGE_MAX_COSETS", "0", 1);
    CHECK(default_max_cosets() == 1000000);
    ::unsetenv("PINWHEEL_FORGE_MAX_COSETS");
    CHECK(default_max_cosets() == 1000000);
}

TEST_CASE("family presentations are trivial") {
    for (int k : {2, 3, 4, 7})
        for (long n = 1; n <= 5; ++n)
            for (long kappa = -2; kappa <= 2; ++kappa) {
                FamilyParams fp;
                fp.k = k;
                fp.n = n;
                fp.kappa = kappa;
                auto r = verify_trivial(build_family_presentation(fp), 1000000);
                INFO("k=" << k << " n=" << n << " kappa=" << kappa);
                CHECK(r.kind == TrivialityResult::Kind::Trivial);
                CHECK(r.enumeration.order == 1);
            }
}

TEST_CASE("generator mode and macro mode agree") {
    for (int k : {2, 4})
        for (auto conv : {CommutatorConvention::UVUinvVinv, CommutatorConvention::UinvVinvUV})
            for (long n = 1; n <= 3; ++n)
                for (long kappa = -2; kappa <= 2; ++kappa) {
                    FamilyParams fp;
                    fp.k = k;
                    fp.n = n;
                    fp.kappa = kappa;
                    fp.conv = conv;
                    auto macro = verify_trivial(build_family_presentation(fp), 1000000);
                    fp.xi_as_generators = true;
                    auto gens = build_family_presentation(fp);
                    CHECK(gens.index_of("xi") >= 0);
                    CHECK(gens.index_of("eta") >= 0);
                    auto generated = verify_trivial(gens, 1000000);
                    CHECK(macro.kind == generated.kind);
                    CHECK(macro.h1 == generated.h1);
                }
}

TEST_CASE("product form of the twisted relation agrees") {
    for (auto conv : {CommutatorConvention::UVUinvVinv, CommutatorConvention::UinvVinvUV})
        for (long n = 1; n <= 3; ++n) {
            FamilyParams fp;
            fp.k = 2;
            fp.n = n;
            fp.conv = conv;
            auto eq = build_family_presentation(fp);
            fp.twist_as_product = true;
            auto prod = build_family_presentation(fp);
            // The relators coincide up to the equation being moved to one side.
            CHECK(eq.relators.size() == prod.relators.size());
            CHECK(verify_trivial(prod, 1000000).kind == TrivialityResult::Kind::Trivial);
            bool same = true;
            for (std::size_t i = 0; i < eq.relators.size(); ++i) same = same && eq.relators[i] == prod.relators[i];
            CHECK(same);
        }
}

TEST_CASE("family builders are deterministic and validated") {
    FamilyParams fp;
    fp.k = 3;
    fp.n = 2;
    CHECK(family_presentation_text(fp) == family_presentation_text(fp));
    auto p = build_family_presentation(fp);
    CHECK(to_dsl(parse_presentation(to_dsl(p))) == to_dsl(p));
    CHECK(p.generators.size() == 6);
    CHECK(p.relators.size() == 15);
    fp.k = 5;
    CHECK_THROWS_AS(build_family_presentation(fp), PreconditionError);
    fp.k = 3;
    fp.n = 0;
    CHECK_THROWS_AS(build_family_presentation(fp), PreconditionError);
    CHECK(family_uses_kappa(2));
    CHECK_FALSE(family_uses_kappa(3));
}

#include "doctest.h"

#include "pinwheel_forge/errors.hpp"
#include "pinwheel_forge/swkit.hpp"
#include "support.hpp"

#include <algorithm>
#include <cstdlib>

using namespace pwf::sw;
using pwf::ParseError;
using pwf::PreconditionError;
using testsupport::uniform;

namespace {

long dot(const Coeffs& x, const Coeffs& y) {
    long s = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
    return s;
}

// Brute force over the whole box, with no pruning.
std::vector<CharClass> naive_search(int rank, const std::vector<AdjConstraint>& cs, long c_square, long bound) {
    std::vector<CharClass> out;
    Coeffs k(static_cast<std::size_t>(rank), -bound);
    while (true) {
        bool odd = std::all_of(k.begin(), k.end(), [](long v) { return v % 2 != 0; });
        if (odd && dot(k, k) == c_square) {
            bool ok = true;
            for (const auto& c : cs)
                if (std::labs(dot(k, c.surface)) + dot(c.surface, c.surface) > 2L * c.genus - 2) ok = false;
            if (ok) out.push_back({k});
        }
        std::size_t i = 0;
        while (i < k.size() && k[i] == bound) k[i++] = -bound;
        if (i == k.size()) break;
        ++k[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CharClass> pm(const std::string& text, int rank) {
    auto k = parse_class(text, rank);
    std::vector<CharClass> v{k, -k};
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("odd lattice pairing") {
    OddLattice lat(4);
    CHECK(lat.pair({3, 1, 1, 1}, {3, 1, 1, 1}) == 6);
    CHECK(lat.square({1, 1, 0, 0}) == 0);
    CHECK(lat.square({0, -1, 0, 0}) == -1);
    CHECK(lat.signature() == -2);
    CHECK_THROWS_AS(OddLattice(0), PreconditionError);
    CHECK(is_characteristic({{3, 1, -1, 1}}));
    CHECK_FALSE(is_characteristic({{3, 2, 1, 1}}));
}

TEST_CASE("shipped basic class cases") {
    auto k3 = basic_class_case("k3");
    auto r3 = enumerate_basic_classes(k3.lattice, k3.constraints, k3.c_square);
    CHECK(r3.classes == pm("3h - e1 - e2 - e3", 4));
    CHECK(r3.warnings.empty());

    auto k2 = basic_class_case("k2");
    auto r2 = enumerate_basic_classes(k2.lattice, k2.constraints, k2.c_square);
    CHECK(r2.classes == pm("3h - e1 - e2", 3));
    CHECK(r2.warnings.empty());

    // Larger boxes find nothing new.
    CHECK(enumerate_basic_classes(k3.lattice, k3.constraints, k3.c_square, 41).classes == r3.classes);
    CHECK_THROWS_AS(basic_class_case("k9"), PreconditionError);
}

TEST_CASE("basic class search agrees with brute force") {
    for (int trial = 0; trial < 300; ++trial) {
        const int rank = static_cast<int>(uniform(1, 4));
        const long bound = uniform(1, 5);
        std::vector<AdjConstraint> cs;
        const long n = uniform(1, 4);
        for (long i = 0; i < n; ++i) {
            Coeffs s(static_cast<std::size_t>(rank));
            for (auto& v : s) v = uniform(-2, 2);
            cs.push_back({s, static_cast<int>(uniform(0, 4))});
        }
        const long c_square = uniform(-6, 10);
        OddLattice lat(rank);
        auto got = enumerate_basic_classes(lat, cs, c_square, bound);
        CHECK(got.classes == naive_search(rank, cs, c_square, bound));
        for (const auto& k : got.classes) {
            CHECK(std::binary_search(got.classes.begin(), got.classes.end(), -k));
            // Characteristic vectors of an odd unimodular form satisfy k^2 = signature mod 8.
            long r = ((lat.square(k.coeffs) - lat.signature()) % 8 + 8) % 8;
            CHECK(r == 0);
        }
    }
}

TEST_CASE("basic class search edge cases") {
    OddLattice lat(3);
    std::vector<AdjConstraint> hc{{{1, 0, 0}, 3}};
    // Wrong parity for the square: nothing characteristic fits.
    CHECK(enumerate_basic_classes(lat, hc, 6).classes.empty());
    auto unconfined = enumerate_basic_classes(lat, hc, 7, 3);
    CHECK_FALSE(unconfined.warnings.empty());
    CHECK(unconfined.warnings.front().find("not confined") != std::string::npos);

    CHECK_THROWS_AS(enumerate_basic_classes(lat, {}, 7), PreconditionError);
    CHECK_THROWS_AS(enumerate_basic_classes(lat, hc, 7, 0), PreconditionError);
    CHECK_THROWS_AS(enumerate_basic_classes(lat, {{{1, 0}, 3}}, 7), PreconditionError);
    CHECK_THROWS_AS(enumerate_basic_classes(lat, {{{1, 0, 0}, -1}}, 7), PreconditionError);
}

TEST_CASE("minimality") {
    OddLattice lat(4);
    auto m = minimality_check(lat, {parse_class("3h - e1 - e2 - e3")});
    CHECK(m.minimal);
    CHECK_FALSE(m.witness);
    CHECK(m.difference_squares == std::vector<long>{24});

    auto k1 = parse_class("3h - e1 - e2 - e3"), k2 = parse_class("3h - e1 - e2 + e3");
    auto n = minimality_check(lat, {k1, k2});
    CHECK_FALSE(n.minimal);
    REQUIRE(n.witness);
    auto d = (*n.witness)[0].coeffs;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= (*n.witness)[1].coeffs[i];
    CHECK(lat.square(d) == -4);
    CHECK(std::find(n.difference_squares.begin(), n.difference_squares.end(), -4) != n.difference_squares.end());

    CHECK(minimality_check(lat, {}).minimal);
}

TEST_CASE("class text format") {
    auto k = parse_class("3h - e1 - e2 - e3");
    CHECK(k.coeffs == Coeffs{3, 1, 1, 1});
    CHECK(to_string(k) == "3h - e1 - e2 - e3");
    CHECK(parse_class("- e1 + 2*e3").coeffs == Coeffs{0, 1, 0, -2});
    CHECK(parse_class("h", 3).coeffs == Coeffs{1, 0, 0});
    CHECK(to_string(parse_class("0", 2)) == "0");
    CHECK(to_string(CharClass{{-1, -2, 0, 3}}) == "-h + 2e1 - 3e3");
    for (int trial = 0; trial < 300; ++trial) {
        Coeffs c(static_cast<std::size_t>(uniform(1, 5)));
        for (auto& v : c) v = uniform(-4, 4);
        CharClass x{c};
        CHECK(parse_class(to_string(x), static_cast<int>(c.size())) == x);
    }
    CHECK_THROWS_AS(parse_class("3h - e0"), ParseError);
    CHECK_THROWS_AS(parse_class("3x"), ParseError);
    CHECK_THROWS_AS(parse_class(""), ParseError);
    CHECK_THROWS_AS(parse_class("h - e5", 3), ParseError);
}

TEST_CASE("Laurent polynomials") {
    auto f = parse_laurent("2*t^3 - 5 + 2t^-3");
    CHECK(f.coeff(3) == 2);
    CHECK(f.coeff(0) == -5);
    CHECK(f.coeff(-3) == 2);
    CHECK(distinguishing_invariant(f) == 5);
    CHECK(to_string(parse_laurent("t^-1 - t")) == "t^-1 - t");
    CHECK(to_string(parse_laurent("t - t")) == "0");
    CHECK(parse_laurent("0").is_zero());
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly p;
        for (int i = 0; i < 4; ++i) p = p + LaurentPoly::monomial(uniform(-5, 5), uniform(-4, 4));
        CHECK(parse_laurent(to_string(p)) == p);
        CHECK((p - p).is_zero());
    }
    CHECK_THROWS_AS(parse_laurent("t^"), ParseError);
    CHECK_THROWS_AS(parse_laurent("2 s"), ParseError);
}

TEST_CASE("affine families and their invariant") {
    auto f0 = parse_laurent("t^-1 - t");
    auto finf = parse_laurent("1");
    Int prev = -1;
    for (long n = 1; n <= 60; ++n) {
        auto g = mms_family(finf, f0, n);
        CHECK(g == finf + f0 * Int(n));
        CHECK(g.coeff(1) == -n);
        auto inv = distinguishing_invariant(g);
        CHECK(inv > prev);
        prev = inv;
    }
    auto s = sign_choices(7);
    CHECK(s == std::array<Int, 4>{8, -6, 6, -8});
}

TEST_CASE("first homology after surgery") {
    using V = std::vector<Int>;
    CHECK(surgery_h1({}, 3, 1, TorusKind::Nullhomologous) == V{3});
    CHECK(surgery_h1({2}, 1, 4, TorusKind::Nullhomologous) == V{2});
    CHECK(surgery_h1({}, 0, 1, TorusKind::Nullhomologous) == V{0});
    CHECK(surgery_h1({}, 1, 5, TorusKind::CurveNullhomologous).empty());
    CHECK(surgery_h1({2}, -1, 5, TorusKind::CurveNullhomologous) == V{2});
    CHECK_THROWS_AS(surgery_h1({}, 2, 4, TorusKind::Nullhomologous), PreconditionError);
    CHECK_THROWS_AS(surgery_h1({}, 2, 1, TorusKind::CurveNullhomologous), PreconditionError);
}

TEST_CASE("canonical genus feasibility") {
    auto a = canonical_genus_feasibility(3, 3);
    CHECK(a.required == 7);
    CHECK(a.lower_bound == 7);
    CHECK(a.feasible);
    CHECK_FALSE(canonical_genus_feasibility(8, 1).feasible);
    CHECK(canonical_genus_feasibility(7, 1).feasible);
    for (int k = 2; k <= 9; ++k)
        for (int s = 1; s <= 5; ++s) {
            auto r = canonical_genus_feasibility(k, s);
            CHECK(r.required == 10 - k);
            if (r.feasible && k > 2) CHECK(canonical_genus_feasibility(k - 1, s).feasible);
            if (r.feasible && s > 1) CHECK(canonical_genus_feasibility(k, s - 1).feasible);
        }
    CHECK_THROWS_AS(canonical_genus_feasibility(1, 1), PreconditionError);
    CHECK_THROWS_AS(canonical_genus_feasibility(10, 1), PreconditionError);
    CHECK_THROWS_AS(canonical_genus_feasibility(5, 0), PreconditionError);
}

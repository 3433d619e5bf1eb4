#include "doctest.h"

#include "pinwheel_forge/zlin.hpp"
#include "support.hpp"

#include <functional>
#include <stdexcept>

using namespace pwf::zlin;
using testsupport::uniform;

namespace {

Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        Int term = m(0, c) * cofactor_det(minor);
        acc += (c % 2 == 0) ? term : Int(-term);
    }
    return acc;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
             const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (cur.size() == k) {
        f(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, cur, i + 1, f);
        cur.pop_back();
    }
}

// gcd of all r x r minors.
Int determinantal_divisor(const IntMatrix& m, std::size_t r) {
    Int g = 0;
    std::vector<std::size_t> rs, cs;
    subsets(m.rows(), r, rs, 0, [&](const std::vector<std::size_t>& rows) {
        subsets(m.cols(), r, cs, 0, [&](const std::vector<std::size_t>& cols) {
            IntMatrix sub(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rows[i], cols[j]);
            g = boost::multiprecision::gcd(g, cofactor_det(sub));
        });
    });
    return g;
}

IntMatrix e8() {
    return {{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
            {0, 0, -1, 2, -1, 0, 0, 0},  {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
            {0, 0, 0, 0, 0, -1, 2, 0},   {0, 0, -1, 0, 0, 0, 0, 2}};
}

}  // namespace

TEST_CASE("2x2 products agree with entrywise multiplication") {
    for (int trial = 0; trial < 500; ++trial) {
        MatZ2 x{uniform(-9, 9), uniform(-9, 9), uniform(-9, 9), uniform(-9, 9)};
        MatZ2 y{uniform(-9, 9), uniform(-9, 9), uniform(-9, 9), uniform(-9, 9)};
        MatZ2 p = x * y;
        CHECK(p.a == x.a * y.a + x.b * y.c);
        CHECK(p.b == x.a * y.b + x.b * y.d);
        CHECK(p.c == x.c * y.a + x.d * y.c);
        CHECK(p.d == x.c * y.b + x.d * y.d);
        CHECK(p.det() == x.det() * y.det());
    }
}

TEST_CASE("mat2_product applies the first factor first") {
    MatZ2 f1{1, 1, 0, 1}, f2{0, 1, -1, 0}, f3{2, 1, 1, 1};
    CHECK(mat2_product({f1}) == f1);
    CHECK(mat2_product({f1, f2}) == f2 * f1);
    CHECK(mat2_product({f1, f2, f3}) == f3 * (f2 * f1));
    CHECK_THROWS_AS(mat2_product({}), std::invalid_argument);
}

TEST_CASE("inverse over Z") {
    MatZ2 u{2, 1, 1, 1};
    CHECK(u * u.inverse() == MatZ2::identity());
    MatZ2 v{0, 1, 1, 0};
    CHECK(v.inverse() == v);
    CHECK_THROWS_AS((MatZ2{2, 0, 0, 1}.inverse()), std::domain_error);
    CHECK(MatZ2{1, 2, 3, 4}.str() == "[[1,2],[3,4]]");
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(uniform(1, 5));
        auto m = testsupport::random_matrix(n, n, -6, 6);
        CHECK(m.det() == cofactor_det(m));
    }
    CHECK(e8().det() == 1);
    CHECK(IntMatrix(0, 0).det() == 1);
}

TEST_CASE("Smith normal form against determinantal divisors") {
    for (int trial = 0; trial < 150; ++trial) {
        auto r = static_cast<std::size_t>(uniform(1, 4));
        auto c = static_cast<std::size_t>(uniform(1, 4));
        auto m = testsupport::random_matrix(r, c, -5, 5);
        if (testsupport::coin() && r > 1)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;  // force a dependency
        auto snf = smith_normal_form(m);
        CHECK(snf.U * m * snf.V == snf.D);
        CHECK(abs(snf.U.det()) == 1);
        CHECK(abs(snf.V.det()) == 1);
        auto diag = smith_diagonal(m);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(snf.D(i, j) == 0);
        Int prod = 1;
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
            Int dk = determinantal_divisor(m, k);
            prod *= diag[k - 1];
            CHECK(prod == dk);
            CHECK(diag[k - 1] >= 0);
            if (k >= 2 && diag[k - 1] != 0) CHECK(diag[k - 1] % diag[k - 2] == 0);
        }
    }
}

TEST_CASE("smith_diagonal examples") {
    CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Int>{2, 6, 12});
    CHECK(smith_diagonal({{0, 0}, {0, 0}}) == std::vector<Int>{0, 0});
    CHECK(smith_diagonal({{6}}) == std::vector<Int>{6});
}

TEST_CASE("gram_analyze on standard forms") {
    auto h = gram_analyze({{0, 1}, {1, 0}});
    CHECK(h.rank == 2);
    CHECK(h.signature == 0);
    CHECK(h.parity == Parity::Even);
    CHECK(h.radical_rank == 0);

    auto odd = gram_analyze(IntMatrix::diagonal({1, -1, -1}));
    CHECK(odd.rank == 3);
    CHECK(odd.signature == -1);
    CHECK(odd.parity == Parity::Odd);

    auto e = gram_analyze(e8());
    CHECK(e.rank == 8);
    CHECK(e.signature == 8);
    CHECK(e.parity == Parity::Even);

    auto degenerate = gram_analyze({{1, 1}, {1, 1}});
    CHECK(degenerate.rank == 1);
    CHECK(degenerate.radical_rank == 1);
    CHECK(degenerate.signature == 1);
    CHECK(degenerate.parity == Parity::Odd);

    // The radical is spanned by (1,-1); the quotient form is (2), even.
    auto even_quotient = gram_analyze({{2, -2}, {-2, 2}});
    CHECK(even_quotient.rank == 1);
    CHECK(even_quotient.parity == Parity::Even);

    auto zero = gram_analyze(IntMatrix(3, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.radical_rank == 3);

    CHECK_THROWS_AS(gram_analyze({{1, 2}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(gram_analyze(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("form invariants survive congruence by unimodular matrices") {
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(uniform(1, 5));
        IntMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = uniform(-3, 3);
        auto p = testsupport::random_unimodular(n);
        auto g2 = p.transpose() * g * p;
        auto a = gram_analyze(g), b = gram_analyze(g2);
        CHECK(a.rank == b.rank);
        CHECK(a.signature == b.signature);
        CHECK(a.parity == b.parity);
        CHECK(a.radical_rank == b.radical_rank);
    }
}

TEST_CASE("rational signature of a disguised diagonal form") {
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(uniform(1, 6));
        std::vector<Int> d;
        long expected = 0;
        for (std::size_t i = 0; i < n; ++i) {
            long v = uniform(-3, 3);
            d.push_back(v);
            expected += v > 0 ? 1 : v < 0 ? -1 : 0;
        }
        auto p = testsupport::random_unimodular(n);
        auto g = p.transpose() * IntMatrix::diagonal(d) * p;
        CHECK(rational_signature(g) == expected);
    }
}

TEST_CASE("matrix helpers") {
    IntMatrix m{{1, 2, 3}, {4, 5, 6}};
    CHECK(m.transpose() == IntMatrix{{1, 4}, {2, 5}, {3, 6}});
    CHECK(m.str() == "[[1,2,3],[4,5,6]]");
    CHECK_FALSE(m.is_square());
    CHECK(IntMatrix(2, 2).is_zero());
    CHECK(IntMatrix::identity(3).is_symmetric());
    CHECK(to_string(Parity::Odd) == "odd");
}

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pwf::zlin {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Row-major [[a,b],[c,d]].
struct MatZ2 {
    Int a{1}, b{0}, c{0}, d{1};

    static MatZ2 identity() { return {}; }

    Int det() const { return a * d - b * c; }
    MatZ2 operator*(const MatZ2& o) const;
    MatZ2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const MatZ2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const MatZ2& o) const { return !(*this == o); }

    // Throws std::domain_error unless det = +-1.
    MatZ2 inverse() const;
    std::string str() const;
};

// fk * ... * f1 for factors [f1, ..., fk]: the first element is applied first.
MatZ2 mat2_product(const std::vector<MatZ2>& factors);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;
    // Exact determinant (Bareiss); square matrices only.
    Int det() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row_i += f * row_j
    void add_row(std::size_t i, std::size_t j, const Int& f);
    void add_col(std::size_t i, std::size_t j, const Int& f);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct SmithResult {
    IntMatrix D, U, V;  // D = U * M * V
};

SmithResult smith_normal_form(const IntMatrix& m);

// Diagonal of a Smith form, nonnegative, divisibility-ordered.
std::vector<Int> smith_diagonal(const IntMatrix& m);

enum class Parity { Even, Odd };

struct FormReport {
    std::size_t rank = 0;
    long signature = 0;
    Parity parity = Parity::Even;
    std::size_t radical_rank = 0;
};

// Rank, signature and parity of the form induced on the quotient by the
// saturated radical. Throws std::invalid_argument for non-symmetric input.
FormReport gram_analyze(const IntMatrix& g);

// Signature of a symmetric matrix over Q (counts of positive minus negative
// eigenvalues).
long rational_signature(const IntMatrix& g);

std::string to_string(const Int& v);
std::string to_string(Parity p);

}  // namespace pwf::zlin

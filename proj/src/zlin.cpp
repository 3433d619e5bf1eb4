#include "pinwheel_forge/zlin.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace pwf::zlin {

MatZ2 MatZ2::operator*(const MatZ2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

MatZ2 MatZ2::inverse() const {
    Int dt = det();
    if (dt == 1) return {d, -b, -c, a};
    if (dt == -1) return {-d, b, c, -a};
    throw std::domain_error("matrix " + str() + " is not invertible over Z");
}

std::string MatZ2::str() const {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

MatZ2 mat2_product(const std::vector<MatZ2>& factors) {
    if (factors.empty()) throw std::invalid_argument("mat2_product: empty factor list");
    MatZ2 acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = factors[i] * acc;
    return acc;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

Int IntMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("IntMatrix::det: not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = r.D;
    const std::size_t lim = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < lim; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_min_pivot(d, t, pr, pc)) break;
        for (;;) {
            d.swap_rows(t, pr);
            r.U.swap_rows(t, pr);
            d.swap_cols(t, pc);
            r.V.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                d.add_row(i, t, -q);
                r.U.add_row(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                d.add_col(j, t, -q);
                r.V.add_col(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                find_min_pivot(d, t, pr, pc);
                continue;
            }
            // Row and column of the pivot are clear; enforce divisibility.
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        r.U.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (!divides) {
                pr = t;
                pc = t;
                continue;
            }
            break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            r.U.negate_row(t);
        }
    }
    return r;
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
    SmithResult s = smith_normal_form(m);
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.push_back(s.D(i, i));
    return out;
}

long rational_signature(const IntMatrix& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("rational_signature: matrix is not symmetric");
    const std::size_t n = g.rows();
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(g(i, j));
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

    long pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && at(j, j) == 0) ++j;
            if (j < n) {
                for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(j, c));
                for (std::size_t r = 0; r < n; ++r) std::swap(at(r, k), at(r, j));
            } else {
                j = k + 1;
                while (j < n && at(k, j) == 0) ++j;
                if (j == n) continue;  // row k is zero
                // e_k += e_j gives diagonal 2*B(e_k,e_j) != 0
                for (std::size_t c = 0; c < n; ++c) at(k, c) += at(j, c);
                for (std::size_t r = 0; r < n; ++r) at(r, k) += at(r, j);
            }
        }
        const Rational p = at(k, k);
        (p > 0 ? pos : neg) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            Rational f = at(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return pos - neg;
}

FormReport gram_analyze(const IntMatrix& g) {
    if (!g.is_square()) throw std::invalid_argument("gram_analyze: matrix is not square");
    if (!g.is_symmetric()) throw std::invalid_argument("gram_analyze: matrix is not symmetric");
    const std::size_t n = g.rows();
    SmithResult s = smith_normal_form(g);
    std::size_t r = 0;
    while (r < n && s.D(r, r) != 0) ++r;

    // Columns r.. of V span the saturated radical; columns ..r give a
    // complement, so the quotient form is Vr^T G Vr.
    IntMatrix vr(n, r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) vr(i, j) = s.V(i, j);
    IntMatrix q = vr.transpose() * g * vr;

    FormReport rep;
    rep.rank = r;
    rep.radical_rank = n - r;
    rep.signature = rational_signature(q);
    rep.parity = Parity::Even;
    for (std::size_t i = 0; i < r; ++i)
        if (q(i, i) % 2 != 0) rep.parity = Parity::Odd;
    return rep;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace pwf::zlin

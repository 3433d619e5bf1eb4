#include "pinwheel_forge/swkit.hpp"

#include "pinwheel_forge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace pwf::sw {

OddLattice::OddLattice(int r) : rank(r) {
    if (r < 1) throw PreconditionError("OddLattice: rank must be >= 1");
}

long OddLattice::pair(const Coeffs& x, const Coeffs& y) const {
    if (x.size() != static_cast<std::size_t>(rank) || y.size() != static_cast<std::size_t>(rank))
        throw PreconditionError("OddLattice: vector of wrong rank");
    long s = x[0] * y[0];
    for (int i = 1; i < rank; ++i) s -= x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    return s;
}

CharClass CharClass::operator-() const {
    CharClass c = *this;
    for (long& v : c.coeffs) v = -v;
    return c;
}

bool is_characteristic(const CharClass& c) {
    return !c.coeffs.empty() && std::all_of(c.coeffs.begin(), c.coeffs.end(), [](long v) { return v % 2 != 0; });
}

namespace {

struct Interval {
    bool bounded = false;
    long lo = 0, hi = 0;
};

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// Interval propagation of |sum w_j x_j| <= R over all constraints.
std::vector<Interval> confine(const OddLattice& lat, const std::vector<AdjConstraint>& cs) {
    const auto r = static_cast<std::size_t>(lat.rank);
    std::vector<Interval> iv(r);
    for (const auto& c : cs)
        if (2L * c.genus - 2 - lat.square(c.surface) < 0) {
            // Nothing satisfies this constraint.
            for (auto& x : iv) x = {true, 0, 0};
            return iv;
        }
    for (std::size_t pass = 0; pass < 4 * r + 4; ++pass) {
        bool changed = false;
        for (const auto& c : cs) {
            const long R = 2L * c.genus - 2 - lat.square(c.surface);
            Coeffs w(r);
            w[0] = c.surface[0];
            for (std::size_t i = 1; i < r; ++i) w[i] = -c.surface[i];
            for (std::size_t j = 0; j < r; ++j) {
                if (w[j] == 0) continue;
                long omin = 0, omax = 0;
                bool ok = true;
                for (std::size_t i = 0; i < r && ok; ++i) {
                    if (i == j || w[i] == 0) continue;
                    if (!iv[i].bounded) {
                        ok = false;
                        break;
                    }
                    long a = w[i] * iv[i].lo, b = w[i] * iv[i].hi;
                    omin += std::min(a, b);
                    omax += std::max(a, b);
                }
                if (!ok) continue;
                // -R - omax <= w_j x_j <= R - omin
                long lo_w = -R - omax, hi_w = R - omin;
                long lo, hi;
                if (w[j] > 0) {
                    lo = ceil_div(lo_w, w[j]);
                    hi = floor_div(hi_w, w[j]);
                } else {
                    lo = ceil_div(hi_w, w[j]);
                    hi = floor_div(lo_w, w[j]);
                }
                Interval& cur = iv[j];
                if (!cur.bounded) {
                    cur = {true, lo, hi};
                    changed = true;
                } else if (lo > cur.lo || hi < cur.hi) {
                    cur.lo = std::max(cur.lo, lo);
                    cur.hi = std::min(cur.hi, hi);
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    return iv;
}

std::string coord_name(std::size_t i) { return i == 0 ? "h" : "e" + std::to_string(i); }

}  // namespace

BasicClassSearch enumerate_basic_classes(const OddLattice& lat, const std::vector<AdjConstraint>& constraints,
                                         long c_square, long bound) {
    if (constraints.empty()) throw PreconditionError("enumerate_basic_classes: empty constraint list");
    if (bound < 1) throw PreconditionError("enumerate_basic_classes: bound must be >= 1");
    if (bound > 10000) throw PreconditionError("enumerate_basic_classes: bound too large");
    const auto r = static_cast<std::size_t>(lat.rank);
    for (const auto& c : constraints) {
        if (c.surface.size() != r) throw PreconditionError("enumerate_basic_classes: constraint of wrong rank");
        if (c.genus < 0) throw PreconditionError("enumerate_basic_classes: negative genus");
    }

    BasicClassSearch out;
    auto iv = confine(lat, constraints);
    for (std::size_t i = 0; i < r; ++i) {
        if (!iv[i].bounded)
            out.warnings.push_back("coordinate " + coord_name(i) + " is not confined by the constraints");
        else if (iv[i].lo < -bound || iv[i].hi > bound)
            out.warnings.push_back("coordinate " + coord_name(i) + " is confined to [" + std::to_string(iv[i].lo) +
                                   "," + std::to_string(iv[i].hi) + "], wider than the search box");
    }

    // Odd values only: a characteristic class has every coordinate odd.
    const long top = bound % 2 ? bound : bound - 1;
    Coeffs x(r, -top);
    for (;;) {
        if (lat.square(x) == c_square) {
            bool ok = true;
            for (const auto& c : constraints) {
                long dot = lat.pair(x, c.surface);
                if (std::labs(dot) + lat.square(c.surface) > 2L * c.genus - 2) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.classes.push_back(CharClass{x});
        }
        std::size_t i = 0;
        while (i < r && x[i] == top) x[i++] = -top;
        if (i == r) break;
        x[i] += 2;
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

namespace {

Coeffs unit(std::size_t rank, std::size_t idx, long v) {
    Coeffs c(rank, 0);
    c[idx] = v;
    return c;
}

}  // namespace

ShippedCase basic_class_case(std::string_view name) {
    // h - e_i has coordinates (1; ..1..); e_i has (0; ..-1..).
    auto h_minus_e = [](std::size_t rank, std::size_t i) {
        Coeffs c(rank, 0);
        c[0] = 1;
        c[i] = 1;
        return c;
    };
    if (name == "k3") {
        ShippedCase s{OddLattice(4), {}, 6};
        for (std::size_t i = 1; i <= 3; ++i) s.constraints.push_back({h_minus_e(4, i), 2});
        for (std::size_t i = 1; i <= 3; ++i) s.constraints.push_back({unit(4, i, -1), 1});
        s.constraints.push_back({unit(4, 0, 1), 3});
        return s;
    }
    if (name == "k2") {
        ShippedCase s{OddLattice(3), {}, 7};
        s.constraints.push_back({h_minus_e(3, 1), 2});
        s.constraints.push_back({h_minus_e(3, 2), 2});
        s.constraints.push_back({unit(3, 1, -1), 1});
        s.constraints.push_back({unit(3, 0, 1), 3});
        return s;
    }
    throw PreconditionError("unknown basic class case '" + std::string(name) + "' (expected k2 or k3)");
}

MinimalityResult minimality_check(const OddLattice& lat, const std::vector<CharClass>& classes) {
    std::set<CharClass> all;
    for (const auto& c : classes) {
        all.insert(c);
        all.insert(-c);
    }
    MinimalityResult r;
    std::set<long> squares;
    for (const auto& k1 : all)
        for (const auto& k2 : all) {
            if (k1 == k2) continue;
            Coeffs d(k1.coeffs.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = k1.coeffs[i] - k2.coeffs[i];
            long sq = lat.square(d);
            squares.insert(sq);
            if (sq == -4 && r.minimal) {
                r.minimal = false;
                r.witness = std::array<CharClass, 2>{k1, k2};
            }
        }
    r.difference_squares.assign(squares.begin(), squares.end());
    return r;
}

namespace {

[[noreturn]] void class_error(const std::string& msg, std::size_t pos) {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
}

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long read_long(std::string_view s, std::size_t& i) {
    long v = 0;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (v > (std::numeric_limits<long>::max() - 9) / 10) class_error("number too large", start);
        v = v * 10 + (s[i] - '0');
        ++i;
    }
    if (i == start) class_error("expected number", start);
    return v;
}

}  // namespace

CharClass parse_class(std::string_view s, int rank) {
    std::vector<std::pair<std::size_t, long>> terms;  // (coordinate, coefficient of basis element)
    std::size_t i = 0;
    skip_ws(s, i);
    if (i == s.size()) class_error("empty class", i);
    if (s.substr(i) == "0") return CharClass{Coeffs(static_cast<std::size_t>(std::max(rank, 1)), 0)};
    bool first = true;
    while (true) {
        skip_ws(s, i);
        if (i == s.size()) break;
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws(s, i);
        } else if (!first) {
            class_error("expected '+' or '-'", i);
        }
        long coeff = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = read_long(s, i);
            skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws(s, i);
            }
        }
        if (i >= s.size()) class_error("expected h or e<i>", i);
        std::size_t at = i;
        if (s[i] == 'h') {
            ++i;
            terms.emplace_back(0, sign * coeff);
        } else if (s[i] == 'e') {
            ++i;
            long idx = read_long(s, i);
            if (idx < 1) class_error("e indices start at 1", at);
            terms.emplace_back(static_cast<std::size_t>(idx), sign * coeff);
        } else {
            class_error("expected h or e<i>", i);
        }
        first = false;
    }
    std::size_t need = 1;
    for (const auto& t : terms) need = std::max(need, t.first + 1);
    std::size_t r = rank > 0 ? static_cast<std::size_t>(rank) : need;
    if (need > r) class_error("index exceeds lattice rank " + std::to_string(r), 0);
    Coeffs c(r, 0);
    for (const auto& [idx, v] : terms) c[idx] += idx == 0 ? v : -v;
    return CharClass{c};
}

std::string to_string(const CharClass& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        long v = i == 0 ? c.coeffs[i] : -c.coeffs[i];
        if (v == 0) continue;
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        long a = std::labs(v);
        if (a != 1) os << a;
        os << coord_name(i);
        first = false;
    }
    return first ? "0" : os.str();
}

LaurentPoly::LaurentPoly(const Int& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(const Int& coeff, long exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

Int LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(long exp, const Int& c) {
    if (c == 0) return;
    Int& slot = terms_[exp];
    slot += c;
    if (slot == 0) terms_.erase(exp);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o * Int(-1); }

LaurentPoly LaurentPoly::operator*(const Int& s) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

LaurentPoly parse_laurent(std::string_view s) {
    LaurentPoly p;
    std::size_t i = 0;
    skip_ws(s, i);
    if (i == s.size()) class_error("empty polynomial", i);
    bool first = true;
    while (true) {
        skip_ws(s, i);
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws(s, i);
        } else if (!first) {
            class_error("expected '+' or '-'", i);
        }
        Int coeff = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            coeff = Int(std::string(s.substr(start, i - start)));
            have_coeff = true;
            skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws(s, i);
            }
        }
        long exp = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            skip_ws(s, i);
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws(s, i);
                long es = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    es = s[i] == '-' ? -1 : 1;
                    ++i;
                }
                exp = es * read_long(s, i);
            }
        } else if (!have_coeff) {
            class_error("expected coefficient or t", i);
        }
        p = p + LaurentPoly::monomial(coeff * sign, exp);
        first = false;
    }
    return p;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a;
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly mms_family(const LaurentPoly& f_infty, const LaurentPoly& f_zero, const Int& n) {
    return f_infty + f_zero * n;
}

Int distinguishing_invariant(const LaurentPoly& f) {
    Int best = 0;
    for (const auto& [e, c] : f.terms()) best = std::max(best, Int(abs(c)));
    return best;
}

std::array<Int, 4> sign_choices(const Int& n) { return {1 + n, 1 - n, -1 + n, -1 - n}; }

std::vector<Int> surgery_h1(const std::vector<Int>& h1, const Int& p, const Int& q, TorusKind kind) {
    if (boost::multiprecision::gcd(p, q) != 1)
        throw PreconditionError("surgery_h1: p and q must be coprime");
    std::vector<Int> out = h1;
    if (kind == TorusKind::Nullhomologous) {
        if (abs(p) != 1) out.push_back(abs(p));
        return out;
    }
    if (abs(p) == 1) return out;
    throw PreconditionError("surgery_h1: p/q surgery with p != +-1 on a torus whose curve is nullhomologous is not covered");
}

FeasibilityReport canonical_genus_feasibility(int k, int s) {
    if (k < 2 || k > 9) throw PreconditionError("canonical_genus_feasibility: k must be in 2..9");
    if (s < 1) throw PreconditionError("canonical_genus_feasibility: surgered components must be >= 1");
    FeasibilityReport r;
    r.k = k;
    r.surgered_components = s;
    r.required = 10 - k;
    r.lower_bound = 1 + 2 * s;
    r.within_technique_bound = r.required >= r.technique_bound;
    r.feasible = r.required >= r.lower_bound && r.within_technique_bound;
    return r;
}

}  // namespace pwf::sw

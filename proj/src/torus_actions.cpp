#include "pinwheel_forge/torus_actions.hpp"

#include "pinwheel_forge/errors.hpp"

#include <cctype>
#include <sstream>

namespace pwf::torus {

Int OrbitData::det(std::ptrdiff_t r, std::ptrdiff_t s) const {
    const auto k = static_cast<std::ptrdiff_t>(pairs.size());
    const auto& a = pairs[static_cast<std::size_t>(((r % k) + k) % k)];
    const auto& b = pairs[static_cast<std::size_t>(((s % k) + k) % k)];
    return a.first * b.second - b.first * a.second;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    Int integer() {
        skip_ws();
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') digits.push_back('-');
            advance();
            skip_ws();
        }
        std::size_t start = digits.size();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits.push_back(text_[pos_]);
            advance();
        }
        if (digits.size() == start) fail("expected integer");
        return Int(digits);
    }
    [[noreturn]] void fail(const std::string& msg) {
        skip_ws();
        throw ParseError(msg, line_, col_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

OrbitData parse_orbit_data(std::string_view text) {
    Cursor c(text);
    OrbitData d;
    if (c.at_end()) c.fail("empty orbit data");
    for (;;) {
        c.expect('(');
        Int p = c.integer();
        c.expect(',');
        Int q = c.integer();
        c.expect(')');
        d.pairs.emplace_back(std::move(p), std::move(q));
        if (c.at_end()) break;
        c.expect(';');
        if (c.at_end()) break;
    }
    return d;
}

std::string to_string(const OrbitData& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.pairs.size(); ++i)
        os << (i ? ";" : "") << "(" << d.pairs[i].first << "," << d.pairs[i].second << ")";
    return os.str();
}

bool OrbitValidation::valid() const { return !items.empty() && failure() == nullptr; }

const OrbitCheck* OrbitValidation::failure() const {
    for (const auto& it : items)
        if (!it.passed) return &it;
    return nullptr;
}

OrbitValidation validate_orbit_data(const OrbitData& d) {
    OrbitValidation v;
    const std::size_t k = d.size();
    if (k == 0) {
        v.items.push_back({"size", 0, false, "no pairs"});
        return v;
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto& [p, q] = d.pairs[i];
        Int g = boost::multiprecision::gcd(p, q);
        bool ok = g == 1;
        v.items.push_back({"gcd", i, ok, "gcd(" + p.str() + "," + q.str() + ") = " + g.str()});
    }
    for (std::size_t i = 0; i < k; ++i) {
        auto ii = static_cast<std::ptrdiff_t>(i);
        Int dt = d.det(ii - 1, ii);
        bool ok = dt == 1 || dt == -1;
        v.items.push_back({"det", i, ok, "D(" + std::to_string((i + k - 1) % k) + "," + std::to_string(i) + ") = " + dt.str()});
    }
    return v;
}

namespace {

void require_valid(const OrbitData& d) {
    auto v = validate_orbit_data(d);
    if (!v.valid()) {
        const OrbitCheck* f = v.failure();
        throw PreconditionError("invalid orbit data: " + f->check + " at index " + std::to_string(f->index) + " (" +
                                f->detail + ")");
    }
}

}  // namespace

SphereConfig sphere_geometry(const OrbitData& d) {
    require_valid(d);
    SphereConfig c;
    c.k = d.size();
    for (std::size_t i = 0; i < c.k; ++i) {
        auto ii = static_cast<std::ptrdiff_t>(i);
        c.self_ints.push_back(d.det(ii - 1, ii) * d.det(ii, ii + 1) * d.det(ii - 1, ii + 1));
        c.adjacents.push_back(d.det(ii - 1, ii));
    }
    return c;
}

IntMatrix gram_matrix(const OrbitData& d) {
    SphereConfig c = sphere_geometry(d);
    const std::size_t k = c.k;
    IntMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) g(i, i) += c.self_ints[i];
    if (k >= 2) {
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = (i + k - 1) % k;
            g(i, j) -= c.adjacents[i];
            g(j, i) -= c.adjacents[i];
        }
    }
    return g;
}

IntMatrix intersection_form(const OrbitData& d) {
    IntMatrix g = gram_matrix(d);
    const std::size_t k = d.size();
    bool negate;
    if (k % 2 == 1) {
        Int eps = 1;
        for (std::size_t i = 0; i < k; ++i) eps *= d.det(static_cast<std::ptrdiff_t>(i) - 1, static_cast<std::ptrdiff_t>(i));
        negate = eps == 1;
    } else {
        negate = zlin::rational_signature(g) > 0;
    }
    if (negate)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) g(i, j) = -g(i, j);
    return g;
}

std::string ClassificationResult::str() const {
    if (kind == Kind::S4) return "S4";
    std::ostringstream os;
    bool first = true;
    auto part = [&](long n, const char* what) {
        if (n == 0) return;
        os << (first ? "" : " # ") << n << " x " << what;
        first = false;
    };
    part(cp2_count, "CP2");
    part(cp2bar_count, "CP2bar");
    part(s2xs2_count, "S2xS2");
    return os.str();
}

ClassificationResult classify_action(const OrbitData& d) {
    IntMatrix q = intersection_form(d);
    const std::size_t k = d.size();
    zlin::FormReport f = zlin::gram_analyze(q);
    if (f.rank + 2 != k)
        throw PreconditionError("intersection form has rank " + std::to_string(f.rank) + ", expected " +
                                std::to_string(k >= 2 ? k - 2 : 0));
    ClassificationResult r;
    if (f.rank == 0) return r;
    r.kind = ClassificationResult::Kind::Sum;
    const long rank = static_cast<long>(f.rank);
    if (f.parity == zlin::Parity::Odd) {
        r.cp2_count = (rank + f.signature) / 2;
        r.cp2bar_count = (rank - f.signature) / 2;
    } else {
        if (f.signature != 0)
            throw Error("even intersection form with signature " + std::to_string(f.signature));
        r.s2xs2_count = rank / 2;
    }
    return r;
}

BarycentricPinwheel barycentric_pinwheel(const OrbitData& d) {
    require_valid(d);
    const std::size_t k = d.size();
    if (k < 3) throw PreconditionError("barycentric_pinwheel: need at least 3 pairs");
    SphereConfig c = sphere_geometry(d);
    ClassificationResult cls = classify_action(d);

    BarycentricPinwheel out;
    auto& p = out.pinwheel;
    p.name = "barycentric(" + to_string(d) + ")";
    for (std::size_t i = 0; i < k; ++i) {
        const Int& r = c.self_ints[i];
        Int n = abs(r);
        pinwheel::PinwheelComponent comp;
        comp.name = "B_" + n.str();
        comp.s = {0, r};
        comp.t = {0, Int(0)};
        comp.euler = 1;
        comp.htc_at_t = true;
        comp.traded_name = n == 0 ? "A" : "A_(" + n.str() + ")";
        p.components.push_back(comp);
        out.isotropy.push_back(d.pairs[i]);
    }
    p.certification = {pinwheel::Certification::Kind::Matrix, "barycentric subdivision of the orbit polygon"};
    long b_plus = cls.cp2_count + cls.s2xs2_count;
    long b_minus = cls.cp2bar_count + cls.s2xs2_count;
    p.target = {static_cast<long>(k), b_plus, b_minus, 0};

    auto rep = pinwheel::validate_pinwheel(p);
    if (!rep.passed())
        throw Error("barycentric pinwheel failed validation: " + rep.failure()->check + ": " + rep.failure()->detail);
    return out;
}

}  // namespace pwf::torus

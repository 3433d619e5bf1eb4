#include "pinwheel_forge/pinwheel.hpp"

#include "pinwheel_forge/errors.hpp"

#include <sstream>

namespace pwf::pinwheel {

MatZ2 gluing_phi() { return {0, 1, -1, 0}; }

MatZ2 gluing_alpha(const Int& m) { return {1, m, 0, -1}; }

MatZ2 gluing_beta(const Int& n) { return {-1, 0, n, 1}; }

MatZ2 theta(const Int& a) { return {a, 1, -1, 0}; }

MonodromyResult monodromy_check(const std::vector<Int>& a_seq) {
    if (a_seq.empty()) throw PreconditionError("monodromy_check: empty sequence");
    std::vector<MatZ2> factors;
    factors.reserve(a_seq.size());
    for (const auto& a : a_seq) factors.push_back(theta(a));
    MonodromyResult r;
    r.product = zlin::mat2_product(factors);
    if (r.product == MatZ2::identity())
        r.kind = MonodromyKind::PlusId;
    else if (r.product == -MatZ2::identity())
        r.kind = MonodromyKind::MinusId;
    else
        r.kind = MonodromyKind::Neither;
    return r;
}

std::string to_string(MonodromyKind k) {
    switch (k) {
        case MonodromyKind::PlusId: return "PlusId";
        case MonodromyKind::MinusId: return "MinusId";
        case MonodromyKind::Neither: return "Neither";
    }
    return "?";
}

ExtRational ExtRational::reciprocal() const {
    if (inf_) return ExtRational(0);
    if (value_ == 0) return infinity();
    return ExtRational(Rational(1) / value_);
}

ExtRational ExtRational::operator-(const ExtRational& y) const {
    if (inf_ && y.inf_) throw std::domain_error("ExtRational: infinity - infinity");
    if (inf_ || y.inf_) return infinity();
    return ExtRational(value_ - y.value_);
}

std::string ExtRational::str() const {
    if (inf_) return "inf";
    return value_.str();
}

ExtRational continued_fraction(const std::vector<Int>& c_seq) {
    ExtRational v = ExtRational::infinity();
    for (auto it = c_seq.rbegin(); it != c_seq.rend(); ++it) v = ExtRational(*it) - v.reciprocal();
    return v;
}

std::vector<ExtRational> cyclic_continued_fractions(const std::vector<Int>& a_seq) {
    const std::size_t k = a_seq.size();
    std::vector<ExtRational> out;
    out.reserve(k);
    for (std::size_t start = 0; start < k; ++start) {
        std::vector<Int> c;
        c.reserve(k - 1);
        for (std::size_t j = 0; j + 1 < k; ++j) c.push_back(a_seq[(start + j) % k]);
        out.push_back(continued_fraction(c));
    }
    return out;
}

bool cyclic_cf_all_zero(const std::vector<Int>& a_seq) {
    if (a_seq.size() < 3) throw PreconditionError("cyclic_cf_all_zero: need at least 3 terms");
    for (const auto& v : cyclic_continued_fractions(a_seq))
        if (v != ExtRational(0)) return false;
    return true;
}

long Pinwheel::euler_sum() const {
    long s = 0;
    for (const auto& c : components) s += c.euler;
    return s;
}

bool ValidationReport::passed() const { return failure() == nullptr; }

const ValidationItem* ValidationReport::failure() const {
    for (const auto& it : items)
        if (!it.passed) return &it;
    return nullptr;
}

std::vector<Int> interface_sequence(const Pinwheel& p) {
    const std::size_t k = p.components.size();
    std::vector<Int> a;
    a.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& cur = p.components[i];
        const auto& next = p.components[(i + 1) % k];
        if (!cur.t.self_int || !next.s.self_int)
            throw PreconditionError("interface " + std::to_string(i) + " (" + cur.name + " -> " + next.name +
                                    "): self-intersection unknown");
        a.push_back(*cur.t.self_int + *next.s.self_int);
    }
    return a;
}

ValidationReport validate_pinwheel(const Pinwheel& p) {
    ValidationReport rep;
    rep.euler_sum = p.euler_sum();
    if (!p.complete || p.components.empty()) {
        rep.items.push_back({"complete", false, "component data incomplete" + (p.note.empty() ? "" : ": " + p.note)});
        return rep;
    }
    const std::size_t k = p.components.size();

    bool genus_ok = true;
    std::string genus_detail;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& cur = p.components[i];
        const auto& next = p.components[(i + 1) % k];
        if (cur.t.genus != next.s.genus) {
            genus_ok = false;
            genus_detail = "interface " + std::to_string(i) + ": g(T) = " + std::to_string(cur.t.genus) +
                           " in " + cur.name + ", g(S) = " + std::to_string(next.s.genus) + " in " + next.name;
            break;
        }
    }
    rep.items.push_back({"genus", genus_ok, genus_ok ? "g(T_i) = g(S_i+1) for all i" : genus_detail});

    if (p.certification.kind == Certification::Kind::Matrix) {
        try {
            auto mono = monodromy_check(interface_sequence(p));
            rep.monodromy = mono;
            rep.items.push_back({"monodromy", mono.closes(), to_string(mono.kind) + " " + mono.product.str()});
        } catch (const PreconditionError& e) {
            rep.items.push_back({"monodromy", false, e.what()});
        }
    }

    bool euler_ok = rep.euler_sum == p.target.euler;
    rep.items.push_back({"euler", euler_ok,
                         "sum " + std::to_string(rep.euler_sum) + ", target " + std::to_string(p.target.euler)});
    return rep;
}

namespace {

std::string interface_label(const Pinwheel& p, std::size_t i) {
    const std::size_t k = p.components.size();
    return "interface " + std::to_string(i) + " (" + p.components[i].name + " -> " +
           p.components[(i + 1) % k].name + ")";
}

void rename_if_traded(PinwheelComponent& c) {
    if (c.s.genus == 1 && c.t.genus == 1 && !c.traded_name.empty()) {
        c.name = c.traded_name;
        c.traded_name.clear();
    }
}

// 1-handles on the giving side, 2-handles on the receiving side.
void trade_unchecked(Pinwheel& p, std::size_t i) {
    const std::size_t k = p.components.size();
    auto& give = p.components[i];
    auto& take = p.components[(i + 1) % k];
    give.t.genus = 1;
    take.s.genus = 1;
    give.euler -= 2;
    take.euler += 2;
}

bool interface_genus(const Pinwheel& p, std::size_t i, int g) {
    const std::size_t k = p.components.size();
    return p.components[i].t.genus == g && p.components[(i + 1) % k].s.genus == g;
}

void finish(Pinwheel& p) {
    for (auto& c : p.components) rename_if_traded(c);
}

}  // namespace

Pinwheel trade_interface(const Pinwheel& p, std::size_t i) {
    if (i >= p.components.size()) throw PreconditionError("trade_interface: index out of range");
    if (!interface_genus(p, i, 0)) throw PreconditionError(interface_label(p, i) + ": interface is not genus 0");
    if (!p.components[i].htc_at_t)
        throw PreconditionError(interface_label(p, i) + ": handle trading condition fails");
    Pinwheel out = p;
    trade_unchecked(out, i);
    finish(out);
    return out;
}

Pinwheel handle_trade(const Pinwheel& p) {
    if (p.components.empty()) throw PreconditionError("handle_trade: empty pinwheel");
    const std::size_t k = p.components.size();
    for (std::size_t i = 0; i < k; ++i)
        if (!interface_genus(p, i, 0)) throw PreconditionError(interface_label(p, i) + ": interface is not genus 0");
    for (std::size_t i = 0; i < k; ++i)
        if (!p.components[i].htc_at_t)
            throw PreconditionError(interface_label(p, i) + ": handle trading condition fails");
    Pinwheel out = p;
    for (std::size_t i = 0; i < k; ++i) trade_unchecked(out, i);
    finish(out);
    return out;
}

Pinwheel push_through(const Pinwheel& p, std::size_t j) {
    const std::size_t k = p.components.size();
    if (j >= k) throw PreconditionError("push_through: index out of range");
    const auto& comp = p.components[j];
    if (!comp.push_through_eligible)
        throw PreconditionError("push_through: component " + std::to_string(j) + " (" + comp.name +
                                ") is not push-through eligible");
    const std::size_t prev = (j + k - 1) % k;
    Pinwheel out = p;
    if (interface_genus(p, prev, 0)) {
        if (!p.components[prev].htc_at_t)
            throw PreconditionError(interface_label(p, prev) + ": handle trading condition fails");
        trade_unchecked(out, prev);
    } else if (!interface_genus(p, prev, 1)) {
        throw PreconditionError(interface_label(p, prev) + ": mixed interface genera");
    }
    // The handles just received are pushed across the other side using the
    // isotopy between the two meridians.
    if (interface_genus(out, j, 0))
        trade_unchecked(out, j);
    else if (!interface_genus(out, j, 1))
        throw PreconditionError(interface_label(p, j) + ": mixed interface genera");
    finish(out);
    return out;
}

SurgeryInvariants SurgeryInvariants::from_betti(long b1, long b_plus, long b_minus) {
    SurgeryInvariants s;
    s.b1 = b1;
    s.b_plus = b_plus;
    s.b_minus = b_minus;
    s.euler = 2 - 2 * b1 + b_plus + b_minus;
    s.signature = b_plus - b_minus;
    return s;
}

bool SurgeryInvariants::consistent() const {
    return b1 >= 0 && b_plus >= 0 && b_minus >= 0 && euler == 2 - 2 * b1 + b_plus + b_minus &&
           signature == b_plus - b_minus;
}

SurgeryInvariants torus_surgery(const SurgeryInvariants& inv) {
    if (!inv.consistent()) throw PreconditionError("torus_surgery: inconsistent invariants");
    SurgeryInvariants out = SurgeryInvariants::from_betti(inv.b1 + 1, inv.b_plus + 1, inv.b_minus + 1);
    if (out.euler != inv.euler || out.signature != inv.signature)
        throw std::logic_error("torus_surgery changed euler or signature");
    return out;
}

SurgeryInvariants apply_standard_surgeries(const SurgeryInvariants& inv, int bing_pairs) {
    if (bing_pairs < 0) throw PreconditionError("apply_standard_surgeries: negative pair count");
    if (!inv.consistent()) throw PreconditionError("apply_standard_surgeries: inconsistent invariants");
    SurgeryInvariants out = inv;
    for (int i = 0; i < 2 * bing_pairs; ++i) out = torus_surgery(out);
    return out;
}

namespace {

nlohmann::ordered_json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw PreconditionError("pinwheel json: expected integer, got " + j.dump());
}

nlohmann::ordered_json surface_json(const InterfaceSurface& s) {
    nlohmann::ordered_json j;
    j["genus"] = s.genus;
    j["self_int"] = s.self_int ? int_json(*s.self_int) : nlohmann::ordered_json();
    return j;
}

InterfaceSurface surface_from_json(const nlohmann::json& j) {
    InterfaceSurface s;
    s.genus = j.at("genus").get<int>();
    if (s.genus < 0) throw PreconditionError("pinwheel json: negative genus");
    if (j.contains("self_int") && !j.at("self_int").is_null()) s.self_int = int_from_json(j.at("self_int"));
    return s;
}

nlohmann::ordered_json component_json(const PinwheelComponent& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["s"] = surface_json(c.s);
    j["t"] = surface_json(c.t);
    j["euler"] = c.euler;
    j["htc_at_t"] = c.htc_at_t;
    j["push_through_eligible"] = c.push_through_eligible;
    j["surgered_bing_pairs"] = c.surgered_bing_pairs;
    if (!c.traded_name.empty()) j["traded_name"] = c.traded_name;
    return j;
}

PinwheelComponent component_from_json(const nlohmann::json& j) {
    PinwheelComponent c;
    c.name = j.at("name").get<std::string>();
    c.s = surface_from_json(j.at("s"));
    c.t = surface_from_json(j.at("t"));
    c.euler = j.at("euler").get<long>();
    c.htc_at_t = j.value("htc_at_t", false);
    c.push_through_eligible = j.value("push_through_eligible", false);
    c.surgered_bing_pairs = j.value("surgered_bing_pairs", 0);
    if (c.surgered_bing_pairs < 0) throw PreconditionError("pinwheel json: negative surgered_bing_pairs");
    c.traded_name = j.value("traded_name", std::string());
    return c;
}

}  // namespace

nlohmann::ordered_json to_json(const Pinwheel& p) {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : p.components) j["components"].push_back(component_json(c));
    j["certification"] = {{"kind", p.certification.kind == Certification::Kind::Matrix ? "matrix" : "external"},
                          {"cite", p.certification.cite}};
    j["target"] = {{"euler", p.target.euler},
                   {"b_plus", p.target.b_plus},
                   {"b_minus", p.target.b_minus},
                   {"b1", p.target.b1}};
    j["surgered_pairs"] = p.surgered_pairs ? nlohmann::ordered_json(*p.surgered_pairs) : nlohmann::ordered_json();
    j["complete"] = p.complete;
    if (!p.note.empty()) j["note"] = p.note;
    if (!p.partial_components.empty()) {
        j["partial_components"] = nlohmann::ordered_json::array();
        for (const auto& c : p.partial_components) j["partial_components"].push_back(component_json(c));
    }
    return j;
}

Pinwheel pinwheel_from_json(const nlohmann::json& j) {
    try {
        Pinwheel p;
        p.name = j.value("name", std::string());
        for (const auto& c : j.at("components")) p.components.push_back(component_from_json(c));
        const auto& cert = j.at("certification");
        std::string kind = cert.at("kind").get<std::string>();
        if (kind == "matrix")
            p.certification.kind = Certification::Kind::Matrix;
        else if (kind == "external")
            p.certification.kind = Certification::Kind::External;
        else
            throw PreconditionError("pinwheel json: unknown certification kind '" + kind + "'");
        p.certification.cite = cert.value("cite", std::string());
        const auto& t = j.at("target");
        p.target = {t.at("euler").get<long>(), t.at("b_plus").get<long>(), t.at("b_minus").get<long>(),
                    t.at("b1").get<long>()};
        if (j.contains("surgered_pairs") && !j.at("surgered_pairs").is_null())
            p.surgered_pairs = j.at("surgered_pairs").get<int>();
        p.complete = j.value("complete", true);
        p.note = j.value("note", std::string());
        if (j.contains("partial_components"))
            for (const auto& c : j.at("partial_components")) p.partial_components.push_back(component_from_json(c));
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("pinwheel json: ") + e.what());
    }
}

}  // namespace pwf::pinwheel

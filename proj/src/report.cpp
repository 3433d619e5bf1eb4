#include "pinwheel_forge/cli.hpp"
#include "pinwheel_forge/errors.hpp"
#include "pinwheel_forge/fpgroups.hpp"
#include "pinwheel_forge/pinwheel.hpp"
#include "pinwheel_forge/swkit.hpp"
#include "pinwheel_forge/torus_actions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace pwf::cli {

using nlohmann::ordered_json;
using zlin::Int;
using zlin::MatZ2;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
        case Status::Incomplete: return "incomplete";
    }
    return "fail";
}

namespace {

ordered_json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

ordered_json mat_json(const MatZ2& m) {
    return ordered_json::array({ordered_json::array({int_json(m.a), int_json(m.b)}),
                                ordered_json::array({int_json(m.c), int_json(m.d)})});
}

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

CheckResult power_identity(const std::string& id, long a, int k) {
    std::vector<Int> seq(static_cast<std::size_t>(k), Int(a));
    auto m = pinwheel::monodromy_check(seq);
    CheckResult r;
    r.check_id = id;
    r.inputs = {{"a", std::vector<long>(static_cast<std::size_t>(k), a)}};
    r.status = pass_if(m.kind == pinwheel::MonodromyKind::PlusId);
    r.witness = {{"product", mat_json(m.product)}, {"kind", pinwheel::to_string(m.kind)}};
    r.detail = "theta(" + std::to_string(a) + ")^" + std::to_string(k) + " = " + m.product.str();
    return r;
}

// Entries of the 4-fold product in closed form, written in the swapped basis
// (conjugate by [[0,1],[1,0]] to compare with the matrix product).
MatZ2 four_fold_closed_form(const Int& a1, const Int& a2, const Int& a3, const Int& a4) {
    MatZ2 m;
    m.a = 1 - a2 * a3;
    m.b = a1 + a3 - a1 * a2 * a3;
    m.c = -a2 - a4 + a2 * a3 * a4;
    m.d = 1 - a1 * a2 - a1 * a4 - a3 * a4 + a1 * a2 * a3 * a4;
    return {m.d, m.c, m.b, m.a};
}

CheckResult cyclic_cf_sweep() {
    const long bound = 6;
    long total = 0, zero = 0, zero_closing = 0, closed_form = 0;
    std::vector<long> first_bad;
    std::vector<long> example;
    for (long a1 = -bound; a1 <= bound; ++a1)
        for (long a2 = -bound; a2 <= bound; ++a2)
            for (long a3 = -bound; a3 <= bound; ++a3)
                for (long a4 = -bound; a4 <= bound; ++a4) {
                    ++total;
                    auto seq = ints({a1, a2, a3, a4});
                    auto m = pinwheel::monodromy_check(seq);
                    if (m.product == four_fold_closed_form(seq[0], seq[1], seq[2], seq[3]))
                        ++closed_form;
                    else if (first_bad.empty())
                        first_bad = {a1, a2, a3, a4};
                    if (pinwheel::cyclic_cf_all_zero(seq)) {
                        ++zero;
                        if (example.empty()) example = {a1, a2, a3, a4};
                        if (m.closes())
                            ++zero_closing;
                        else if (first_bad.empty())
                            first_bad = {a1, a2, a3, a4};
                    }
                }
    CheckResult r;
    r.check_id = "monodromy.cyclic_cf_four_fold";
    r.inputs = {{"k", 4}, {"bound", bound}};
    r.status = pass_if(zero == zero_closing && closed_form == total && zero > 0);
    r.witness = {{"sequences", total},
                 {"cf_all_zero", zero},
                 {"cf_all_zero_closing", zero_closing},
                 {"closed_form_matches", closed_form},
                 {"example", example}};
    if (!first_bad.empty()) r.witness["counterexample"] = first_bad;
    r.detail = std::to_string(zero) + " of " + std::to_string(total) +
               " sequences have all cyclic continued fractions 0, all close; closed form matches " +
               std::to_string(closed_form);
    return r;
}

CheckResult orbit_example() {
    const std::string data = "(1,-1);(0,1);(1,-1);(2,-1)";
    auto d = torus::parse_orbit_data(data);
    auto geo = torus::sphere_geometry(d);
    auto cls = torus::classify_action(d);
    CheckResult r;
    r.check_id = "orbit.f2_example";
    r.inputs = {{"data", data}};
    bool ok = geo.self_ints == ints({-2, 0, 2, 0}) && geo.b2() == 2 &&
              cls == torus::ClassificationResult{torus::ClassificationResult::Kind::Sum, 0, 0, 1};
    r.status = pass_if(ok);
    ordered_json si = ordered_json::array();
    for (const auto& v : geo.self_ints) si.push_back(int_json(v));
    r.witness = {{"self_intersections", si}, {"b2", geo.b2()}, {"classification", cls.str()}};
    r.detail = "self-intersections " + si.dump() + ", b2 = " + std::to_string(geo.b2()) + ", " + cls.str();
    return r;
}

// Valid orbit data: a base fan, corner insertions, a GL(2,Z) change of
// basis, pair sign flips, rotation and reversal.
torus::OrbitData random_orbit_data(std::mt19937_64& rng, std::size_t max_k) {
    using P = std::pair<long, long>;
    std::vector<P> v;
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng)) {
        v = {{1, 0}, {0, 1}, {-1, -1}};
    } else {
        long n = std::uniform_int_distribution<long>(-3, 3)(rng);
        v = {{1, 0}, {0, 1}, {-1, n}, {0, -1}};
    }
    std::size_t target = std::uniform_int_distribution<std::size_t>(v.size(), max_k)(rng);
    while (v.size() < target) {
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng);
        const P& x = v[i];
        const P& y = v[(i + 1) % v.size()];
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, P{x.first + y.first, x.second + y.second});
    }
    std::uniform_int_distribution<long> small(-2, 2);
    for (int step = 0; step < 3; ++step) {
        long t = small(rng);
        bool lower = coin(rng);
        for (auto& [p, q] : v) {
            if (lower)
                q += t * p;
            else
                p += t * q;
        }
    }
    if (coin(rng))
        for (auto& [p, q] : v) std::swap(p, q);
    for (auto& [p, q] : v)
        if (coin(rng)) p = -p, q = -q;
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rng() % v.size()), v.end());
    if (coin(rng)) std::reverse(v.begin(), v.end());
    torus::OrbitData d;
    for (const auto& [p, q] : v) d.pairs.emplace_back(Int(p), Int(q));
    return d;
}

CheckResult barycentric_random() {
    const std::size_t samples = 1000, max_k = 6;
    const unsigned long long seed = 20240917;
    std::mt19937_64 rng(seed);
    std::size_t passed = 0;
    std::string first_failure;
    std::map<std::size_t, std::size_t> by_k;
    for (std::size_t i = 0; i < samples; ++i) {
        auto d = random_orbit_data(rng, max_k);
        ++by_k[d.size()];
        try {
            auto bp = torus::barycentric_pinwheel(d);
            auto rep = pinwheel::validate_pinwheel(bp.pinwheel);
            if (rep.passed() && rep.monodromy && rep.monodromy->closes())
                ++passed;
            else if (first_failure.empty())
                first_failure = torus::to_string(d);
        } catch (const Error& e) {
            if (first_failure.empty()) first_failure = torus::to_string(d) + ": " + e.what();
        }
    }
    CheckResult r;
    r.check_id = "orbit.barycentric_random";
    r.inputs = {{"samples", samples}, {"max_k", max_k}, {"seed", seed}};
    r.status = pass_if(passed == samples);
    ordered_json ks = ordered_json::object();
    for (const auto& [k, c] : by_k) ks[std::to_string(k)] = c;
    r.witness = {{"passed", passed}, {"failed", samples - passed}, {"samples_by_k", ks}};
    if (!first_failure.empty()) r.witness["first_failure"] = first_failure;
    r.detail = std::to_string(passed) + "/" + std::to_string(samples) + " synthesized pinwheels validate";
    return r;
}

CheckResult pi1_family(int k) {
    const long n_lo = 1, n_hi = 5, kappa_lo = -2, kappa_hi = 2;
    const std::size_t max_cosets = 1000000;
    std::size_t cases = 0, trivial = 0, max_used = 0;
    bool nontrivial = false;
    std::string first_bad;
    for (auto conv : {fpg::CommutatorConvention::UVUinvVinv, fpg::CommutatorConvention::UinvVinvUV})
        for (long n = n_lo; n <= n_hi; ++n)
            for (long kappa = kappa_lo; kappa <= kappa_hi; ++kappa) {
                fpg::FamilyParams fp;
                fp.k = k;
                fp.n = n;
                fp.kappa = kappa;
                fp.conv = conv;
                auto res = fpg::verify_trivial(fpg::build_family_presentation(fp), max_cosets);
                ++cases;
                max_used = std::max(max_used, res.enumeration.cosets_used);
                if (res.kind == fpg::TrivialityResult::Kind::Trivial) {
                    ++trivial;
                } else {
                    if (res.kind != fpg::TrivialityResult::Kind::Inconclusive) nontrivial = true;
                    if (first_bad.empty())
                        first_bad = "n=" + std::to_string(n) + " kappa=" + std::to_string(kappa) + ": " +
                                    fpg::to_string(res.kind);
                }
            }
    CheckResult r;
    r.check_id = "pi1.family_k" + std::to_string(k);
    r.inputs = {{"k", k},
                {"n", std::to_string(n_lo) + ".." + std::to_string(n_hi)},
                {"kappa", std::to_string(kappa_lo) + ".." + std::to_string(kappa_hi)},
                {"max_cosets", max_cosets},
                {"conventions", {"uvUV", "UVuv"}}};
    // A bounded enumeration that runs out is never reported as nontrivial.
    r.status = trivial == cases ? Status::Pass : nontrivial ? Status::Fail : Status::Inconclusive;
    r.witness = {{"cases", cases}, {"trivial", trivial}, {"order", 1}, {"max_cosets_defined", max_used}};
    if (!first_bad.empty()) r.witness["first_nontrivial"] = first_bad;
    r.detail = std::to_string(trivial) + "/" + std::to_string(cases) +
               " presentations enumerate to the trivial group (max " + std::to_string(max_used) + " cosets)";
    return r;
}

ordered_json classes_json(const std::vector<sw::CharClass>& cs) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cs) a.push_back(sw::to_string(c));
    return a;
}

CheckResult basic_classes(const std::string& name, const std::string& expected) {
    auto sc = sw::basic_class_case(name);
    auto res = sw::enumerate_basic_classes(sc.lattice, sc.constraints, sc.c_square);
    auto k = sw::parse_class(expected, sc.lattice.rank);
    std::vector<sw::CharClass> want = {k, -k};
    std::sort(want.begin(), want.end());
    CheckResult r;
    r.check_id = "sw.basic_classes_" + name;
    r.inputs = {{"case", name}, {"rank", sc.lattice.rank}, {"c_square", sc.c_square}, {"bound", 5}};
    r.status = pass_if(res.classes == want && res.warnings.empty());
    r.witness = {{"classes", classes_json(res.classes)}, {"warnings", res.warnings}};
    r.detail = "basic classes " + classes_json(res.classes).dump() + ", kappa^2 = " + std::to_string(sc.c_square);
    return r;
}

CheckResult minimality_k3() {
    auto sc = sw::basic_class_case("k3");
    auto res = sw::enumerate_basic_classes(sc.lattice, sc.constraints, sc.c_square);
    auto m = sw::minimality_check(sc.lattice, res.classes);
    CheckResult r;
    r.check_id = "sw.minimality_k3";
    r.inputs = {{"classes", classes_json(res.classes)}};
    r.status = pass_if(m.minimal && m.difference_squares == std::vector<long>{24});
    r.witness = {{"minimal", m.minimal}, {"difference_squares", m.difference_squares}};
    r.detail = std::string(m.minimal ? "minimal" : "possibly nonminimal") + ", difference squares " +
               ordered_json(m.difference_squares).dump();
    return r;
}

CheckResult nonminimal_pair() {
    sw::OddLattice lat(4);
    auto kappa = sw::parse_class("3h - e1 - e2", 4);
    auto e = sw::parse_class("e3", 4);
    sw::CharClass plus{kappa.coeffs}, minus{kappa.coeffs};
    for (std::size_t i = 0; i < 4; ++i) {
        plus.coeffs[i] += e.coeffs[i];
        minus.coeffs[i] -= e.coeffs[i];
    }
    auto m = sw::minimality_check(lat, {plus, minus});
    CheckResult r;
    r.check_id = "sw.nonminimal_pair";
    r.inputs = {{"classes", classes_json({plus, minus})}};
    bool ok = !m.minimal && m.witness;
    long sq = 0;
    if (m.witness) {
        sw::Coeffs d(4);
        for (std::size_t i = 0; i < 4; ++i) d[i] = (*m.witness)[0].coeffs[i] - (*m.witness)[1].coeffs[i];
        sq = lat.square(d);
        ok = ok && sq == -4;
    }
    r.status = pass_if(ok);
    r.witness = {{"minimal", m.minimal}, {"witness_difference_square", sq}};
    if (m.witness) r.witness["witness"] = classes_json({(*m.witness)[0], (*m.witness)[1]});
    r.detail = "kappa +- e flagged, difference square " + std::to_string(sq);
    return r;
}

CheckResult surgery_model(const std::string& model, long k, int pairs, std::optional<std::array<long, 3>> expected) {
    auto base = pinwheel::SurgeryInvariants::from_betti(0, 1, k);
    auto out = pinwheel::apply_standard_surgeries(base, pairs);
    CheckResult r;
    r.check_id = "surgery." + model;
    r.inputs = {{"b1", 0}, {"b_plus", 1}, {"b_minus", k}, {"bing_pairs", pairs}};
    bool ok = out.euler == base.euler && out.signature == base.signature && out.consistent();
    if (expected) ok = ok && out.b1 == (*expected)[0] && out.b_plus == (*expected)[1] && out.b_minus == (*expected)[2];
    r.status = pass_if(ok);
    r.witness = {{"b1", out.b1},
                 {"b_plus", out.b_plus},
                 {"b_minus", out.b_minus},
                 {"euler", out.euler},
                 {"signature", out.signature}};
    std::ostringstream os;
    os << "(b1,b+,b-) = (" << out.b1 << "," << out.b_plus << "," << out.b_minus << "), euler " << out.euler
       << ", signature " << out.signature;
    r.detail = os.str();
    return r;
}

CheckResult catalog_entry(const std::string& name) {
    auto p = pinwheel::catalog_lookup(name);
    CheckResult r;
    r.check_id = "catalog." + name;
    r.inputs = {{"name", name}};
    r.witness = ordered_json::object();
    r.witness["certification"] = p.certification.kind == pinwheel::Certification::Kind::Matrix ? "matrix" : "external";
    r.witness["target_euler"] = p.target.euler;
    if (!p.complete) {
        r.status = Status::Incomplete;
        ordered_json parts = ordered_json::array();
        for (const auto& c : p.partial_components) parts.push_back(c.name);
        r.witness["partial_components"] = parts;
        r.witness["note"] = p.note;
        r.detail = p.note;
        return r;
    }
    auto rep = pinwheel::validate_pinwheel(p);
    r.status = pass_if(rep.passed());
    r.witness["euler_sum"] = rep.euler_sum;
    ordered_json items = ordered_json::array();
    for (const auto& it : rep.items)
        items.push_back({{"check", it.check}, {"passed", it.passed}, {"detail", it.detail}});
    r.witness["items"] = items;
    r.detail = "euler sum " + std::to_string(rep.euler_sum) + " = target " + std::to_string(p.target.euler);
    if (rep.monodromy) r.detail += ", monodromy " + pinwheel::to_string(rep.monodromy->kind);
    if (const auto* f = rep.failure()) r.detail = f->check + ": " + f->detail;
    return r;
}

CheckResult mms_check() {
    const long n_hi = 100;
    auto f0 = sw::parse_laurent("t^-1 - t");
    sw::LaurentPoly finf;
    std::set<Int> seen;
    long matches = 0;
    for (long n = 1; n <= n_hi; ++n) {
        auto f = sw::mms_family(finf, f0, Int(n));
        Int inv = sw::distinguishing_invariant(f);
        seen.insert(inv);
        if (f == f0 * Int(n) && inv == n) ++matches;
    }
    CheckResult r;
    r.check_id = "sw.mms_family";
    r.inputs = {{"f_infty", "0"}, {"f_zero", "t^-1 - t"}, {"n", "1.." + std::to_string(n_hi)}};
    r.status = pass_if(matches == n_hi && static_cast<long>(seen.size()) == n_hi);
    r.witness = {{"n_3", sw::to_string(sw::mms_family(finf, f0, Int(3)))},
                 {"matches", matches},
                 {"distinct_invariants", seen.size()}};
    r.detail = "SW(X_3) = " + sw::to_string(sw::mms_family(finf, f0, Int(3))) + ", " + std::to_string(seen.size()) +
               " distinct invariants for n = 1..100";
    return r;
}

CheckResult genus_check(int k, int s, bool expect_feasible) {
    auto rep = sw::canonical_genus_feasibility(k, s);
    CheckResult r;
    r.check_id = "genus.k" + std::to_string(k);
    r.inputs = {{"k", k}, {"surgered_components", s}};
    r.status = pass_if(rep.feasible == expect_feasible);
    r.witness = {{"required", rep.required},
                 {"lower_bound", rep.lower_bound},
                 {"technique_bound", rep.technique_bound},
                 {"feasible", rep.feasible}};
    r.detail = "required genus " + std::to_string(rep.required) + ", lower bound " + std::to_string(rep.lower_bound) +
               ", technique bound " + std::to_string(rep.technique_bound) + ": " +
               (rep.feasible ? "feasible" : "infeasible");
    return r;
}

template <class F>
CheckResult guarded(const std::string& id, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        CheckResult r;
        r.check_id = id;
        r.inputs = ordered_json::object();
        r.status = Status::Fail;
        r.witness = {{"error", e.what()}};
        r.detail = std::string("error: ") + e.what();
        return r;
    }
}

}  // namespace

std::vector<CheckResult> run_all_checks() {
    std::vector<CheckResult> out;
    auto add = [&](const std::string& id, auto&& f) { out.push_back(guarded(id, f)); };

    add("monodromy.three_fold", [] { return power_identity("monodromy.three_fold", -1, 3); });
    add("monodromy.four_fold", [] { return power_identity("monodromy.four_fold", 0, 4); });
    add("monodromy.cyclic_cf_four_fold", cyclic_cf_sweep);
    add("orbit.f2_example", orbit_example);
    add("orbit.barycentric_random", barycentric_random);
    for (int k : {2, 3, 4, 7}) add("pi1.family_k" + std::to_string(k), [k] { return pi1_family(k); });
    add("sw.basic_classes_k3", [] { return basic_classes("k3", "3h - e1 - e2 - e3"); });
    add("sw.basic_classes_k2", [] { return basic_classes("k2", "3h - e1 - e2"); });
    add("sw.minimality_k3", minimality_k3);
    add("sw.nonminimal_pair", nonminimal_pair);
    add("surgery.q2", [] { return surgery_model("q2", 2, 3, std::array<long, 3>{6, 7, 8}); });
    add("surgery.q3", [] { return surgery_model("q3", 3, 3, std::array<long, 3>{6, 7, 9}); });
    add("surgery.q4", [] { return surgery_model("q4", 4, 2, std::nullopt); });
    add("surgery.q6", [] { return surgery_model("q6", 6, 1, std::nullopt); });
    add("surgery.q7", [] { return surgery_model("q7", 7, 1, std::nullopt); });
    add("surgery.q9", [] { return surgery_model("q9", 9, 1, std::nullopt); });
    for (const auto& name : pinwheel::catalog_names())
        if (name.rfind("q", 0) != 0) add("catalog." + name, [name] { return catalog_entry(name); });
    add("sw.mms_family", mms_check);
    // Surgered component counts of the constructions; k = 5 has no stated
    // count and uses one component.
    const std::vector<std::pair<int, int>> counts = {{2, 3}, {3, 3}, {4, 2}, {5, 1}, {6, 1}, {7, 1}};
    for (const auto& [k, s] : counts) add("genus.k" + std::to_string(k), [k = k, s = s] { return genus_check(k, s, true); });
    add("genus.k8", [] { return genus_check(8, 1, false); });
    return out;
}

bool report_passed(const std::vector<CheckResult>& checks) {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == Status::Fail || c.status == Status::Inconclusive;
    });
}

ordered_json report_json(const std::vector<CheckResult>& checks) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["passed"] = report_passed(checks);
    std::map<Status, long> counts;
    ordered_json arr = ordered_json::array();
    ordered_json incomplete = ordered_json::array();
    for (const auto& c : checks) {
        ++counts[c.status];
        ordered_json x;
        x["check_id"] = c.check_id;
        x["inputs"] = c.inputs;
        x["status"] = to_string(c.status);
        x["witness"] = c.witness;
        x["detail"] = c.detail;
        arr.push_back(std::move(x));
        if (c.status == Status::Incomplete) incomplete.push_back(c.check_id);
    }
    j["summary"] = {{"pass", counts[Status::Pass]},
                    {"fail", counts[Status::Fail]},
                    {"inconclusive", counts[Status::Inconclusive]},
                    {"incomplete", counts[Status::Incomplete]}};
    j["incomplete"] = incomplete;
    j["checks"] = arr;
    return j;
}

std::string report_text(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    os << "pinwheel-forge report (" << kSchemaVersion << ")\n\n";
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.check_id.size());
    std::map<Status, long> counts;
    for (const auto& c : checks) {
        ++counts[c.status];
        std::string st = to_string(c.status);
        std::transform(st.begin(), st.end(), st.begin(), [](unsigned char ch) { return std::toupper(ch); });
        os << st << std::string(13 - st.size(), ' ') << c.check_id << std::string(width + 2 - c.check_id.size(), ' ')
           << c.detail << "\n";
    }
    os << "\n"
       << counts[Status::Pass] << " pass, " << counts[Status::Fail] << " fail, " << counts[Status::Inconclusive]
       << " inconclusive, " << counts[Status::Incomplete] << " incomplete\n";
    if (counts[Status::Incomplete] > 0) {
        os << "\nINCOMPLETE (component data available only as diagrams):\n";
        for (const auto& c : checks)
            if (c.status == Status::Incomplete) os << "  " << c.check_id << ": " << c.detail << "\n";
    }
    return os.str();
}

std::string report_schema() {
    return R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "pinwheel-forge/1",
  "title": "pinwheel-forge check report",
  "type": "object",
  "required": ["schema", "passed", "summary", "incomplete", "checks"],
  "additionalProperties": false,
  "properties": {
    "schema": {"const": "pinwheel-forge/1"},
    "passed": {"type": "boolean"},
    "summary": {
      "type": "object",
      "required": ["pass", "fail", "inconclusive", "incomplete"],
      "additionalProperties": false,
      "properties": {
        "pass": {"type": "integer", "minimum": 0},
        "fail": {"type": "integer", "minimum": 0},
        "inconclusive": {"type": "integer", "minimum": 0},
        "incomplete": {"type": "integer", "minimum": 0}
      }
    },
    "incomplete": {"type": "array", "items": {"type": "string"}},
    "checks": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["check_id", "inputs", "status", "witness"],
        "additionalProperties": false,
        "properties": {
          "check_id": {"type": "string", "minLength": 1},
          "inputs": {"type": "object"},
          "status": {"enum": ["pass", "fail", "inconclusive", "incomplete"]},
          "witness": {"type": "object"},
          "detail": {"type": "string"}
        }
      }
    }
  }
}
)";
}

}  // namespace pwf::cli

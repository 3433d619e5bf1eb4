#include "pinwheel_forge/cli.hpp"
#include "pinwheel_forge/errors.hpp"
#include "pinwheel_forge/fpgroups.hpp"
#include "pinwheel_forge/pinwheel.hpp"
#include "pinwheel_forge/swkit.hpp"
#include "pinwheel_forge/torus_actions.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pwf::cli {

using nlohmann::ordered_json;
using zlin::Int;

namespace {

long parse_long(std::string_view s, int col) {
    long v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (!s.empty() && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e)
        throw ParseError("expected integer, got '" + std::string(s) + "'", 1, col);
    return v;
}

std::string_view trim(std::string_view s, int& col) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++col;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::pair<long, long> parse_range(std::string_view text) {
    int col = 1;
    auto s = trim(text, col);
    auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        long v = parse_long(s, col);
        return {v, v};
    }
    int col2 = col + static_cast<int>(dots) + 2;
    auto lo_s = s.substr(0, dots), hi_s = s.substr(dots + 2);
    int c1 = col;
    lo_s = trim(lo_s, c1);
    hi_s = trim(hi_s, col2);
    long lo = parse_long(lo_s, c1), hi = parse_long(hi_s, col2);
    if (lo > hi) throw ParseError("empty range " + std::string(s), 1, col);
    return {lo, hi};
}

std::vector<long> parse_int_list(std::string_view text) {
    std::vector<long> out;
    int col = 1;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        int c = col + static_cast<int>(start);
        out.push_back(parse_long(trim(piece, c), c));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_validation(std::ostream& out, const pinwheel::Pinwheel& p, const pinwheel::ValidationReport& rep) {
    out << p.name << ": " << p.components.size() << " components, target euler " << p.target.euler << "\n";
    for (const auto& it : rep.items) out << "  " << (it.passed ? "ok   " : "FAIL ") << it.check << ": " << it.detail << "\n";
    out << (rep.passed() ? "pass" : "fail") << "\n";
}

int pinwheel_check(const std::string& name, const std::string& a_list, const std::string& file, std::ostream& out) {
    int given = !name.empty() + !a_list.empty() + !file.empty();
    if (given != 1) throw PreconditionError("pinwheel check: give exactly one of NAME, --a or --file");
    if (!a_list.empty()) {
        auto vals = parse_int_list(a_list);
        std::vector<Int> seq(vals.begin(), vals.end());
        auto m = pinwheel::monodromy_check(seq);
        out << "monodromy " << m.product.str() << ": " << pinwheel::to_string(m.kind) << "\n";
        if (seq.size() >= 3) {
            out << "cyclic continued fractions:";
            for (const auto& v : pinwheel::cyclic_continued_fractions(seq)) out << " " << v.str();
            out << "\n";
        }
        out << (m.closes() ? "pass" : "fail") << "\n";
        return m.closes() ? 0 : 1;
    }
    pinwheel::Pinwheel p;
    if (!file.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_file(file));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what(), 1, static_cast<int>(e.byte));
        }
        p = pinwheel::pinwheel_from_json(j);
    } else {
        p = pinwheel::catalog_lookup(name);
    }
    if (!p.complete) {
        out << p.name << ": incomplete (" << p.note << ")\n";
        for (const auto& c : p.partial_components) out << "  partial component " << c.name << "\n";
        return 0;
    }
    auto rep = pinwheel::validate_pinwheel(p);
    print_validation(out, p, rep);
    return rep.passed() ? 0 : 1;
}

int orbit_classify(const std::string& data, std::ostream& out) {
    auto d = torus::parse_orbit_data(data);
    auto v = torus::validate_orbit_data(d);
    if (!v.valid()) {
        const auto* f = v.failure();
        out << "invalid orbit data: " << (f ? f->check + " at " + std::to_string(f->index) + ": " + f->detail : "empty")
            << "\n";
        return 1;
    }
    auto geo = torus::sphere_geometry(d);
    out << "self-intersections:";
    for (const auto& s : geo.self_ints) out << " " << s;
    out << "\nb2 = " << geo.b2() << "\n";
    out << "intersection form " << torus::intersection_form(d).str() << "\n";
    out << torus::classify_action(d).str() << "\n";
    return 0;
}

int orbit_pinwheel(const std::string& data, std::ostream& out) {
    auto d = torus::parse_orbit_data(data);
    auto bp = torus::barycentric_pinwheel(d);
    auto rep = pinwheel::validate_pinwheel(bp.pinwheel);
    out << pinwheel::to_json(bp.pinwheel).dump(2) << "\n";
    print_validation(out, bp.pinwheel, rep);
    return rep.passed() ? 0 : 1;
}

int print_triviality(std::ostream& out, const std::string& label, const fpg::TrivialityResult& r) {
    out << label << ": " << fpg::to_string(r.kind);
    if (r.kind == fpg::TrivialityResult::Kind::NontrivialH1) {
        out << " (H1 factors";
        for (const auto& f : r.h1) out << " " << f;
        out << ")";
    } else if (r.kind == fpg::TrivialityResult::Kind::Inconclusive) {
        out << " (coset limit " << r.enumeration.limit << " reached)";
    } else {
        out << " (order " << r.enumeration.order << ", " << r.enumeration.cosets_used << " cosets)";
    }
    out << "\n";
    return r.kind == fpg::TrivialityResult::Kind::Trivial ? 0 : 1;
}

struct Pi1Options {
    int family = 0;
    std::string n = "1";
    std::string kappa = "-2..2";
    std::size_t max_cosets = 0;
    std::string convention = "uvUV";
    bool xi_generators = false;
    bool twist_product = false;
    bool print = false;
    std::string presentation;
    std::string file;
};

fpg::CommutatorConvention parse_convention(const std::string& s) {
    if (s == "uvUV") return fpg::CommutatorConvention::UVUinvVinv;
    if (s == "UVuv") return fpg::CommutatorConvention::UinvVinvUV;
    throw PreconditionError("unknown commutator convention '" + s + "' (expected uvUV or UVuv)");
}

int pi1_verify(const Pi1Options& o, std::ostream& out) {
    std::size_t limit = o.max_cosets ? o.max_cosets : fpg::default_max_cosets();
    auto conv = parse_convention(o.convention);
    if (!o.presentation.empty() || !o.file.empty()) {
        if (!o.presentation.empty() && !o.file.empty())
            throw PreconditionError("pi1 verify: give only one of --presentation and --file");
        auto p = fpg::parse_presentation(o.file.empty() ? o.presentation : read_file(o.file), conv);
        if (o.print) out << fpg::to_dsl(p) << "\n";
        return print_triviality(out, "presentation", fpg::verify_trivial(p, limit));
    }
    if (o.family == 0) throw PreconditionError("pi1 verify: give --family, --presentation or --file");
    auto [n_lo, n_hi] = parse_range(o.n);
    auto [k_lo, k_hi] = parse_range(o.kappa);
    const bool uses_kappa = fpg::family_uses_kappa(o.family);
    if (!uses_kappa) k_hi = k_lo;
    int rc = 0;
    for (long n = n_lo; n <= n_hi; ++n)
        for (long kappa = k_lo; kappa <= k_hi; ++kappa) {
            fpg::FamilyParams fp;
            fp.k = o.family;
            fp.n = n;
            fp.kappa = kappa;
            fp.conv = conv;
            fp.xi_as_generators = o.xi_generators;
            fp.twist_as_product = o.twist_product;
            auto p = fpg::build_family_presentation(fp);
            if (o.print) out << fpg::to_dsl(p) << "\n";
            std::string label = "k=" + std::to_string(o.family) + " n=" + std::to_string(n);
            if (uses_kappa) label += " kappa=" + std::to_string(kappa);
            rc = std::max(rc, print_triviality(out, label, fpg::verify_trivial(p, limit)));
        }
    return rc;
}

int sw_basic_classes(const std::string& name, long bound, std::ostream& out) {
    auto sc = sw::basic_class_case(name);
    auto res = sw::enumerate_basic_classes(sc.lattice, sc.constraints, sc.c_square, bound);
    out << "rank " << sc.lattice.rank << ", kappa^2 = " << sc.c_square << ", box |coeff| <= " << bound << "\n";
    for (const auto& w : res.warnings) out << "warning: " << w << "\n";
    out << "basic classes:";
    if (res.classes.empty()) out << " none";
    out << "\n";
    for (const auto& c : res.classes) out << "  " << sw::to_string(c) << "\n";
    auto m = sw::minimality_check(sc.lattice, res.classes);
    out << (m.minimal ? "minimal" : "possibly nonminimal") << ", difference squares:";
    for (long d : m.difference_squares) out << " " << d;
    out << "\n";
    if (m.witness)
        out << "witness: " << sw::to_string((*m.witness)[0]) << " and " << sw::to_string((*m.witness)[1]) << "\n";
    return 0;
}

int sw_family(const std::string& f0s, const std::string& finfs, const std::string& range, std::ostream& out) {
    auto f0 = sw::parse_laurent(f0s);
    auto finf = sw::parse_laurent(finfs);
    auto [lo, hi] = parse_range(range);
    for (long n = lo; n <= hi; ++n) {
        auto f = sw::mms_family(finf, f0, Int(n));
        out << "n=" << n << ": " << sw::to_string(f) << "  (max |coeff| " << sw::distinguishing_invariant(f) << ")\n";
    }
    return 0;
}

int report_all(const std::string& json_path, std::ostream& out) {
    auto checks = run_all_checks();
    // "-" sends only the JSON document to stdout.
    if (json_path != "-") out << report_text(checks);
    if (!json_path.empty()) {
        std::string doc = report_json(checks).dump(2) + "\n";
        if (json_path == "-") {
            out << doc;
        } else {
            std::ofstream f(json_path, std::ios::binary);
            if (!f) throw PreconditionError("cannot write " + json_path);
            f << doc;
        }
    }
    return report_passed(checks) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for pinwheel decompositions, torus actions, group presentations and SW bookkeeping",
                 "pinwheel-forge"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* pw = app.add_subcommand("pinwheel", "catalog pinwheels and monodromy sequences");
    pw->require_subcommand(1);
    std::string pw_name, pw_a, pw_file;
    auto* pw_check = pw->add_subcommand("check", "validate a catalog entry, a JSON file or a monodromy sequence");
    pw_check->add_option("name", pw_name, "catalog name");
    pw_check->add_option("--a", pw_a, "comma separated sequence a_1,...,a_k");
    pw_check->add_option("--file", pw_file, "pinwheel JSON file");
    pw_check->callback([&] { action = [&] { return pinwheel_check(pw_name, pw_a, pw_file, out); }; });
    std::string show_name;
    auto* pw_show = pw->add_subcommand("show", "print a catalog entry as JSON");
    pw_show->add_option("name", show_name, "catalog name")->required();
    pw_show->callback([&] {
        action = [&] {
            out << pinwheel::to_json(pinwheel::catalog_lookup(show_name)).dump(2) << "\n";
            return 0;
        };
    });
    auto* pw_list = pw->add_subcommand("list", "list catalog names");
    pw_list->callback([&] {
        action = [&] {
            for (const auto& n : pinwheel::catalog_names()) out << n << "\n";
            return 0;
        };
    });

    auto* orbit = app.add_subcommand("orbit", "torus action orbit data");
    orbit->require_subcommand(1);
    std::string orbit_data;
    auto* oc = orbit->add_subcommand("classify", "classify the 4-manifold of an orbit data sequence");
    oc->add_option("--data", orbit_data, "\"(p,q);(p,q);...\"")->required();
    oc->callback([&] { action = [&] { return orbit_classify(orbit_data, out); }; });
    auto* op = orbit->add_subcommand("pinwheel", "synthesize the barycentric pinwheel");
    op->add_option("--data", orbit_data, "\"(p,q);(p,q);...\"")->required();
    op->callback([&] { action = [&] { return orbit_pinwheel(orbit_data, out); }; });

    auto* pi1 = app.add_subcommand("pi1", "fundamental group presentations");
    pi1->require_subcommand(1);
    Pi1Options po;
    auto* pv = pi1->add_subcommand("verify", "prove triviality by abelianization and coset enumeration");
    pv->add_option("--family", po.family, "construction family k (2, 3, 4, 7)");
    pv->add_option("--n", po.n, "surgery parameter range a..b");
    pv->add_option("--kappa", po.kappa, "second surgery parameter range a..b");
    pv->add_option("--max-cosets", po.max_cosets, "coset limit (default 1000000 or $PINWHEEL_FORGE_MAX_COSETS)");
    pv->add_option("--convention", po.convention, "commutator convention: uvUV or UVuv");
    pv->add_flag("--xi-generators", po.xi_generators, "add eta and xi as generators");
    pv->add_flag("--twist-product", po.twist_product, "write the twisted relation as a product");
    pv->add_flag("--print", po.print, "print each presentation");
    pv->add_option("--presentation", po.presentation, "inline presentation text");
    pv->add_option("--file", po.file, "presentation file");
    pv->callback([&] { action = [&] { return pi1_verify(po, out); }; });

    auto* swc = app.add_subcommand("sw", "Seiberg-Witten bookkeeping");
    swc->require_subcommand(1);
    std::string sw_case;
    long sw_bound = 5;
    auto* bc = swc->add_subcommand("basic-classes", "enumerate basic classes for a shipped constraint set");
    bc->add_option("--case", sw_case, "k2 or k3")->required();
    bc->add_option("--bound", sw_bound, "coefficient box");
    bc->callback([&] { action = [&] { return sw_basic_classes(sw_case, sw_bound, out); }; });
    std::string f0, finf = "0", nrange = "1..5";
    auto* fam = swc->add_subcommand("family", "evaluate SW(X_inf) + n SW(X_0)");
    fam->add_option("--f0", f0, "Laurent polynomial, e.g. \"t^-1 - t\"")->required();
    fam->add_option("--finf", finf, "Laurent polynomial");
    fam->add_option("--n", nrange, "range a..b");
    fam->callback([&] { action = [&] { return sw_family(f0, finf, nrange, out); }; });

    auto* rep = app.add_subcommand("report", "full reproduction report");
    rep->require_subcommand(1);
    std::string json_path;
    auto* rp = rep->add_subcommand("paper", "run every check");
    rp->add_option("--json", json_path, "also write the JSON report (- for stdout)");
    rp->callback([&] { action = [&] { return report_all(json_path, out); }; });
    auto* rs = rep->add_subcommand("schema", "print the JSON schema of the report");
    rs->callback([&] {
        action = [&] {
            out << report_schema();
            return 0;
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }
    if (!action) {
        err << "error: no command\n";
        return 2;
    }
    try {
        return action();
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pwf::cli

#include "pinwheel_forge/errors.hpp"
#include "pinwheel_forge/pinwheel.hpp"

#include <functional>
#include <map>

namespace pwf::pinwheel {

namespace {

struct Spec {
    std::string name;
    long s;
    long t;
    long euler;
    bool htc = false;
    bool push = false;
    int pairs = 0;
    std::string traded;
    int genus = 0;
};

PinwheelComponent make(const Spec& x) {
    PinwheelComponent c;
    c.name = x.name;
    c.s = {x.genus, Int(x.s)};
    c.t = {x.genus, Int(x.t)};
    c.euler = x.euler;
    c.htc_at_t = x.htc;
    c.push_through_eligible = x.push;
    c.surgered_bing_pairs = x.pairs;
    c.traded_name = x.traded;
    return c;
}

TargetInvariants cp2_sum(long k) { return {3 + k, 1, k, 0}; }

TargetInvariants from_inv(const SurgeryInvariants& s) { return {s.euler, s.b_plus, s.b_minus, s.b1}; }

TargetInvariants q_target(long k, int pairs) {
    return from_inv(apply_standard_surgeries(SurgeryInvariants::from_betti(0, 1, k), pairs));
}

Certification external(std::string cite) { return {Certification::Kind::External, std::move(cite)}; }

Certification matrix(std::string cite) { return {Certification::Kind::Matrix, std::move(cite)}; }

// Interface data for the genus-0 pieces. B_n: fiber (0) and negative
// section (-n); K_n: S_+ + F (n+2) then S_- (-n); I_0': two (-1)-spheres.
Spec b1_piece(int pairs = 0) { return {"B_1", 0, -1, 1, true, false, pairs, "A_(1)"}; }
Spec b1_blown(int pairs = 0) { return {"B_1#CP2bar", 0, -1, 2, true, false, pairs, "Ahat"}; }
Spec i0_piece() { return {"I_0'", -1, -1, 2, true, false, 1, "I_0"}; }
Spec k_piece(long n) {
    std::string nm = "K_" + std::to_string(n);
    return {nm, n + 2, -n, 1, false, true, 0, nm + "^0"};
}

Pinwheel cp2() {
    Pinwheel p;
    p.name = "cp2";
    p.components = {make(b1_piece()), make(b1_piece()), make(b1_piece())};
    p.certification = matrix("3-fold sum of B_1 pieces, theta(-1)^3 = Id");
    p.target = cp2_sum(0);
    return p;
}

Pinwheel cp2_k1() {
    Pinwheel p;
    p.name = "cp2_k1";
    p.components = {make(b1_blown()), make(b1_piece()), make(b1_piece())};
    p.certification = matrix("CP2 pinwheel with one component blown up away from the interfaces");
    p.target = cp2_sum(1);
    return p;
}

Pinwheel s2xs2() {
    Pinwheel p;
    p.name = "s2xs2";
    Spec b0{"B_0", 0, 0, 1, true, false, 1, "A"};
    p.components = {make(b0), make(b0), make(b0), make(b0)};
    p.certification = matrix("4-fold sum of B_0 pieces, theta(0)^4 = Id");
    p.target = {4, 1, 1, 0};
    p.surgered_pairs = 4;
    return p;
}

Pinwheel cp2_k2() {
    Pinwheel p;
    p.name = "cp2_k2";
    p.components = {make(i0_piece()), make({"B_1#CP2bar", -1, 0, 2, true, false, 1, "Ahat"}),
                    make({"B_0", 0, 0, 1, true, false, 1, "A"})};
    p.certification = external("Kirby calculus: I_0', B_1#CP2bar, B_0 glued cyclically with T^2xD^2 give CP2#2CP2bar");
    p.target = cp2_sum(2);
    p.surgered_pairs = 3;
    return p;
}

Pinwheel cp2_k3() {
    Pinwheel p;
    p.name = "cp2_k3";
    p.components = {make(b1_blown(1)), make(b1_blown(1)), make(b1_blown(1))};
    p.certification = matrix("CP2 pinwheel blown up once in each component");
    p.target = cp2_sum(3);
    p.surgered_pairs = 3;
    return p;
}

Pinwheel cp2_k4() {
    Pinwheel p;
    p.name = "cp2_k4";
    p.components = {make(i0_piece()), make(k_piece(0)),
                    make({"B_3#3CP2bar", -3, 0, 4, true, false, 1, "Ahat_(3)"})};
    p.certification = external("Kirby calculus: I_0', K_0, B_3#3CP2bar give CP2#4CP2bar");
    p.target = cp2_sum(4);
    p.surgered_pairs = 2;
    return p;
}

Pinwheel cp2_k5() {
    Pinwheel p;
    p.name = "cp2_k5";
    p.certification = external("Kirby calculus on the CP2#5CP2bar pinwheel diagram");
    p.target = cp2_sum(5);
    p.complete = false;
    p.note = "component names and self-intersections are available only as a diagram";
    return p;
}

Pinwheel cp2_k6() {
    Pinwheel p;
    p.name = "cp2_k6";
    p.components = {make(i0_piece()), make(k_piece(0)),
                    make({"L_(0,-3)", 0, -3, 6, false, true, 0, "L^0_(0,-3)"})};
    p.certification = external("Kirby calculus: the CP2#4CP2bar pinwheel with B_3#3CP2bar replaced by L_(0,-3)");
    p.target = cp2_sum(6);
    p.surgered_pairs = 1;
    return p;
}

Pinwheel cp2_k7() {
    Pinwheel p;
    p.name = "cp2_k7";
    p.components = {make(k_piece(1)), make(k_piece(4)),
                    make({"B_7#7CP2bar", -7, 0, 8, true, false, 1, "Ahat_(7)"})};
    p.certification = external("Kirby calculus: K_1, K_4, B_7#7CP2bar give CP2#7CP2bar");
    p.target = cp2_sum(7);
    p.surgered_pairs = 1;
    return p;
}

Pinwheel cp2_k8() {
    Pinwheel p;
    p.name = "cp2_k8";
    p.certification = external("Kirby calculus on the CP2#8CP2bar pinwheel diagram");
    p.target = cp2_sum(8);
    p.complete = false;
    p.note = "only the pieces L_(-1,-3) and W are recorded; their placement is available only as a diagram";
    // L_(-1,-3): S_- and S_+ + F - E_1 - ... - E_6 removed from F_1#6CP2bar.
    // W: S and 2S + F - 2E removed from F_0#CP2bar.
    p.partial_components = {make({"L_(-1,-3)", -1, -3, 7, false, true, 0, "L^0_(-1,-3)"}),
                            make({"W", 0, 0, 2, false, false, 0, ""})};
    return p;
}

Pinwheel cp2_k9() {
    Pinwheel p;
    p.name = "cp2_k9";
    p.certification = external("Kirby calculus on the E(1) pinwheel diagram");
    p.target = cp2_sum(9);
    p.surgered_pairs = 1;
    p.complete = false;
    p.note = "built from K_0 and L_(j,k) pieces whose data is available only as a diagram";
    p.partial_components = {make(k_piece(0))};
    return p;
}

// Symplectic models: all interfaces are tori after handle trading and the
// standard surgeries.
Spec torus(std::string name, long s, long t, long euler) { return {std::move(name), s, t, euler, false, false, 0, "", 1}; }

Pinwheel q_model(std::string name, long k, int pairs, std::vector<Spec> parts) {
    Pinwheel p;
    p.name = std::move(name);
    for (const auto& s : parts) p.components.push_back(make(s));
    p.certification = external("symplectic model from standard surgeries on the Bing tori of the CP2#" +
                               std::to_string(k) + "CP2bar pinwheel");
    p.target = q_target(k, pairs);
    p.surgered_pairs = pairs;
    return p;
}

Spec q_i0() { return torus("T4#CP2bar - (T_I,T u T_I,S)", -1, -1, 2); }
Spec q_hat() { return torus("T4#CP2bar - (That_T u T_S)", -1, 0, 2); }
Spec q_k(long n) {
    return torus("F_" + std::to_string(n) + "(1) - (T_S+ +F u T_S-)", n + 2, -n, 1);
}

const std::map<std::string, std::function<Pinwheel()>, std::less<>>& registry() {
    static const std::map<std::string, std::function<Pinwheel()>, std::less<>> r = {
        {"cp2", cp2},
        {"cp2_k1", cp2_k1},
        {"s2xs2", s2xs2},
        {"cp2_k2", cp2_k2},
        {"cp2_k3", cp2_k3},
        {"cp2_k4", cp2_k4},
        {"cp2_k5", cp2_k5},
        {"cp2_k6", cp2_k6},
        {"cp2_k7", cp2_k7},
        {"cp2_k8", cp2_k8},
        {"cp2_k9", cp2_k9},
        {"q2_model", [] { return q_model("q2_model", 2, 3, {q_i0(), q_hat(), torus("T4 - (T_T u T_S)", 0, 0, 1)}); }},
        {"q3_model", [] { return q_model("q3_model", 3, 3, {q_hat(), q_hat(), q_hat()}); }},
        {"q4_model",
         [] {
             return q_model("q4_model", 4, 2,
                            {q_i0(), torus("T2xS2 - (T_S+ +F u T_S-)", 2, 0, 1),
                             torus("T4#3CP2bar - (T_T,3 u T_S)", -3, 0, 4)});
         }},
        {"q6_model",
         [] {
             return q_model("q6_model", 6, 1,
                            {q_i0(), torus("T2xS2 - (T_S+ +F u T_S-)", 2, 0, 1),
                             torus("F_1(1)#5CP2bar - (T_S+ +F-E1-E2-E3 u T_S- -E4-E5)", 0, -3, 6)});
         }},
        {"q7_model",
         [] {
             return q_model("q7_model", 7, 1, {q_k(1), q_k(4), torus("T4#7CP2bar - (T_T,7 u T_S)", -7, 0, 8)});
         }},
        {"q9_model",
         [] {
             Pinwheel p = q_model("q9_model", 9, 1, {});
             p.complete = false;
             p.note = "elliptic surface E(1) fiber-summed with T2xT2; components come from the diagram-only E(1) pinwheel";
             return p;
         }},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"cp2",      "cp2_k1",   "s2xs2",    "cp2_k2",   "cp2_k3",
                                                    "cp2_k4",   "cp2_k5",   "cp2_k6",   "cp2_k7",   "cp2_k8",
                                                    "cp2_k9",   "q2_model", "q3_model", "q4_model", "q6_model",
                                                    "q7_model", "q9_model"};
    return names;
}

Pinwheel catalog_lookup(std::string_view name) {
    const auto& r = registry();
    auto it = r.find(name);
    if (it == r.end()) throw PreconditionError("unknown catalog entry '" + std::string(name) + "'");
    return it->second();
}

}  // namespace pwf::pinwheel

#pragma once

#include "pinwheel_forge/pinwheel.hpp"
#include "pinwheel_forge/zlin.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pwf::torus {

using zlin::Int;
using zlin::IntMatrix;

struct OrbitData {
    std::vector<std::pair<Int, Int>> pairs;

    std::size_t size() const { return pairs.size(); }
    // D(r,s) = p_r q_s - p_s q_r, indices taken mod k.
    Int det(std::ptrdiff_t r, std::ptrdiff_t s) const;
};

// "(p,q);(p,q);..." with arbitrary whitespace. Throws ParseError.
OrbitData parse_orbit_data(std::string_view text);
std::string to_string(const OrbitData& d);

struct OrbitCheck {
    std::string check;  // "gcd" or "det"
    std::size_t index = 0;
    bool passed = false;
    std::string detail;
};

struct OrbitValidation {
    std::vector<OrbitCheck> items;

    bool valid() const;
    const OrbitCheck* failure() const;
};

OrbitValidation validate_orbit_data(const OrbitData& d);

struct SphereConfig {
    std::vector<Int> self_ints;  // A_i^2, literal triple product
    std::vector<Int> adjacents;  // D(i-1,i)
    std::size_t k = 0;

    std::size_t b2() const { return k - 2; }
};

// Throws PreconditionError on invalid data.
SphereConfig sphere_geometry(const OrbitData& d);

// Diagonal A_i^2 and -D(i-1,i) between neighbours (summed when k = 2).
IntMatrix gram_matrix(const OrbitData& d);

// Gram matrix with the orientation fixed: for odd k the sign is forced by the
// product of adjacent determinants; for even k it is normalized to
// signature <= 0.
IntMatrix intersection_form(const OrbitData& d);

struct ClassificationResult {
    enum class Kind { S4, Sum };
    Kind kind = Kind::S4;
    long cp2_count = 0;
    long cp2bar_count = 0;
    long s2xs2_count = 0;

    bool operator==(const ClassificationResult&) const = default;
    std::string str() const;
};

// Throws PreconditionError for invalid data or rank != k-2, and pwf::Error
// for an even form of nonzero signature.
ClassificationResult classify_action(const OrbitData& d);

struct BarycentricPinwheel {
    pinwheel::Pinwheel pinwheel;
    // Isotropy (p_i, q_i) of the half edge carried by each component's S
    // surface; informational only.
    std::vector<std::pair<Int, Int>> isotropy;
};

// Requires valid data with k >= 3; throws pwf::Error if the resulting
// monodromy does not close.
BarycentricPinwheel barycentric_pinwheel(const OrbitData& d);

}  // namespace pwf::torus

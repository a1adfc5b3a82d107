#ifndef GORLINK_LIAISON_HPP
#define GORLINK_LIAISON_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gorlink/homological.hpp"

namespace gorlink {

/// Certificate of a direct Gorenstein link I ~ J via c.
struct LinkCertificate {
    Ideal linking;  // c
    Ideal input;    // I
    Ideal residual; // J = c : I

    bool c_inside_intersection = false; // c subset of I and of J
    bool colon_c_input_is_residual = false;
    bool colon_c_residual_is_input = false; // double-colon symmetry
    bool grades_equal = false;

    bool valid() const {
        return c_inside_intersection && colon_c_input_is_residual &&
               colon_c_residual_is_input && grades_equal;
    }
};

struct DirectLinkResult {
    Ideal residual;
    LinkCertificate certificate;
};

/// J = c : I with the full certificate. Preconditions: c strictly
/// inside I and grade(c) = grade(I).
DirectLinkResult direct_link(const Ideal& c, const Ideal& i);

/// Minimal resolution has length grade(I) with last rank 1.
bool is_gorenstein(const Ideal& i);

/// Data extracted by comparing the resolutions of (b, y) and a:
/// the canonical-module multiplier omega and the lift it came from.
struct OmegaResult {
    ChainComplex a_res;   // minimal resolution of R/a, length g
    ChainComplex b_res;   // minimal resolution of R/b, length g-1
    ChainComplex b_ext;   // resolution of (b, y)
    ChainMap alpha;       // comparison B -> A
    ChainMap mu;          // comparison B_ext -> A with alpha embedded
    Polynomial omega;     // monic normal form mod (b, y)
    Polynomial omega_raw; // the bare entry of mu_g
    Scalar omega_scale;   // lead coefficient of the reduced raw entry
    Polynomial y_cofactor; // h with omega_raw = omega_nf + (b-part) + h*y
    int g = 0, u = 0, v = 0, d = 0, e = 0;
};

/// Every hypothesis of the two-link construction is validated here:
/// grades g / g-1, Gorenstein resolutions, d = u - v >= 0, y in a,
/// and b : y = b.
OmegaResult compute_omega(const Ideal& a, const Ideal& b, const Polynomial& y);

/// Deterministic search for homogeneous f of degree d making
/// omega + f*y regular mod b. Tries 0 first, then small monomial
/// multiples, then seeded dense forms.
Polynomial choose_f(const Ideal& b, const Polynomial& y, const Polynomial& omega, int d,
                    int trials, std::uint64_t seed);

struct BiliaisonResult {
    Ideal a, b;
    Polynomial y;
    Polynomial f;         // the chosen/supplied degree-d element
    Polynomial f_theorem; // effective f for the generating-set formula
    OmegaResult omega;
    Polynomial z; // omega + f*y
    Ideal middle; // J
    Ideal ideal;  // I, the double-colon ground truth
    LinkCertificate first_link, second_link;
    bool gorenstein = false;
    Ideal formula_ideal; // b + (alpha*_{g-1} + (-1)^g f a_g*)
    bool formula_route_match = false;
    std::string diagnostics;
    std::uint64_t seed = 0;
};

struct BiliaisonOptions {
    std::optional<Polynomial> f; // fixed f instead of searching
    int trials = 400;
    std::uint64_t seed = 1;
};

/// The two-link construction: J = (b, y) : a, then I = (b, z) : J with
/// z = omega + f*y. The colon route is the ground truth; the
/// generating-set formula is cross-checked and mismatches are reported
/// in the diagnostics.
BiliaisonResult two_link_construct(const Ideal& a, const Ideal& b, const Polynomial& y,
                                   const BiliaisonOptions& opts = {});

struct HilbertIdentity {
    bool ok = true;
    int first_failure = -1;
    int window = 0;
};

/// h_{R/I}(j) = h_{R/a}(j-d) + h_{R/b}(j) - h_{R/b}(j-d) for
/// j = 0 .. reg I + g + 2.
HilbertIdentity hilbert_identity_check(const BiliaisonResult& data, int reg_i);

} // namespace gorlink

#endif

#ifndef GORLINK_KUSTIN_MILLER_HPP
#define GORLINK_KUSTIN_MILLER_HPP

#include "gorlink/liaison.hpp"

namespace gorlink {

/// The adapted unprojection-style resolution data for a two-link
/// construction: comparison maps beta and homotopies h, the chain
/// complex L before the top cancellation, and the reduced resolution
/// of I after it.
struct KMData {
    ChainComplex a_res, b_res; // minimal resolutions of R/a, R/b
    ChainMap alpha;
    int g = 0, d = 0;
    Polynomial f_used;                // the degree-d element in the maps, ((-1)^g f_t)
    std::vector<GradedMatrix> beta;   // beta[i] : A_i -> B_{i-1}(d), 1..g
    std::vector<GradedMatrix> h;      // h[i] : B_i -> B_i(d), 0..g-1
    bool beta_canonicalized = false;  // beta_1 aligned with the colon route
    ChainComplex big;                 // the cone L, resolves I(d)
    ChainComplex assembled;           // after the top cancellation, resolves I
    Ideal ideal;                      // the colon-route I it was checked against
    std::string diagnostics;
};

/// Descending lift of the duality maps: beta_g = (-1)^{g+1} id, then
/// beta_i a_{i+1} = b_i beta_{i+1} solved top-down. Index 0 unused.
std::vector<GradedMatrix> compute_beta(const ChainComplex& a_res, const ChainComplex& b_res,
                                       int d);

/// Ascending null-homotopy: h_0 = 0 and
/// beta_i alpha_i = h_{i-1} b_i + b_i h_i; h_{g-1} = 0 is used when the
/// final constraint allows it.
std::vector<GradedMatrix> compute_h(const ChainComplex& a_res, const ChainComplex& b_res,
                                    const ChainMap& alpha, const std::vector<GradedMatrix>& beta,
                                    int d);

/// Full pipeline on top of a two-link construction: compute beta,
/// canonicalize beta_1 against the colon-route ideal, compute h,
/// assemble the cone, split the top unit block, and verify the
/// augmentation. Throws IdealMismatch if the assembled complex
/// resolves a different ideal than data.ideal.
KMData km_build(const BiliaisonResult& data);

/// Corollary-style minimality test: f not a unit and every alpha_i
/// minimal (entries in the maximal ideal) for 1 <= i <= g-1.
bool minimality_check(const KMData& k);

struct BiliaisonCertificate {
    bool b_inside = false;      // b subset of I
    bool grade_step = false;    // grade a = grade b + 1
    bool hilbert_shift = false; // h_{I/b}(j) = h_{a/b}(j - d) on the window
    int window = 0;
    bool all() const { return b_inside && grade_step && hilbert_shift; }
};

/// Numerical shadow of I/b being a twist of a/b.
BiliaisonCertificate biliaison_certificate(const BiliaisonResult& data, int reg_i);

/// Necessary condition for obtainability: reg I - reg a must be even
/// and nonnegative.
bool parity_necessary_condition(int reg_i, int reg_a);

/// Exact matrix identities for the stored maps:
/// beta_i a_{i+1} = b_i beta_{i+1} and
/// beta_i alpha_i = h_{i-1} b_i + b_i h_i.
bool km_identities_hold(const KMData& k);

/// beta_{i,j} = beta_{g-i, w-j} for the R/I table of a Gorenstein
/// ideal of grade g with top twist w.
bool gorenstein_symmetry(const BettiTable& t, int g);

} // namespace gorlink

#endif

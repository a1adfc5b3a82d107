#ifndef GORLINK_GENERATORS_HPP
#define GORLINK_GENERATORS_HPP

#include "gorlink/kustin_miller.hpp"
#include "gorlink/linalg.hpp"

namespace gorlink {

/// Recover f from a target linking element: writes z_target as
/// (b part) + p*y + c*omega with a scalar c and returns p/c, so that
/// (b, omega + f y) = (b, z_target).
Polynomial extract_f(const Ideal& b, const Polynomial& y, const Polynomial& omega,
                     const Polynomial& z_target);

/// Monomial complete-intersection pair b = (x_1^{m_1}, ..., x_{g-1}^{m_{g-1}})
/// inside a = (x_1^{n_1}, ..., x_g^{n_g}).
struct CIFamilyResult {
    Ideal a, b;
    Polynomial y; // x_g^{n_g}
    Polynomial c; // product of x_j^{m_j - n_j}
    BiliaisonResult run;
    Ideal expected; // (x^m's, f x^n's, c + f x_g^{n_g})
    bool matches_expected = false;
};
CIFamilyResult gen_ci_family(const Field& field, const std::vector<int>& m,
                             const std::vector<int>& n, const BiliaisonOptions& opts = {});

/// Artinian Gorenstein ideals with h-vector (1, n, 1); the chain runs
/// a = (x_1..x_n) -> middle = (x_1..x_{n-1})^2 + (x_n) -> I.
struct SallyResult {
    Ideal a, b;
    Polynomial y;
    BiliaisonResult run;
    Ideal expected;        // the Sally ideal with the given units
    Ideal expected_middle; // (x_1..x_{n-1})^2 + (x_n)
    bool matches_expected = false;
    bool middle_matches = false;
};
SallyResult gen_sally(const Field& field, int n, const std::vector<std::int64_t>& units);

/// Submaximal minors of a generic n x n matrix via the two links with
/// y = N_{1,1} and z = M_{1,1}.
struct GenericMinorsResult {
    RingPtr ring;
    Ideal target;          // I_{n-1}(M)
    bool linkage_ran = false; // false for the n = 2 complete intersection
    Ideal a, b;
    Polynomial y, z;
    BiliaisonResult run;
    bool matches_target = false;
    bool sylvester_ok = false; // N11 * I + b = M11 * a + b
};
GenericMinorsResult gen_generic_minors(const Field& field, int n,
                                       const BiliaisonOptions& opts = {});

/// Extrasymmetric 6x6 Pfaffian family (Tom unprojection); d = 0, f = 1.
struct ExtrasymmetricResult {
    RingPtr ring;
    Ideal a, b;
    Polynomial y;
    BiliaisonResult run;
    Ideal expected;      // the printed 9-generator ideal
    bool matches_expected = false;
    PolyMatrix m_prime;  // the output extrasymmetric matrix
    bool pfaffian_match = false; // I = pf_4(M')
};
ExtrasymmetricResult gen_extrasymmetric(const Field& field, std::int64_t lambda,
                                        const BiliaisonOptions& opts = {});

/// Apolar (inverse-system) annihilator of a form under contraction:
/// all forms g of degree <= maxdeg with g o F = 0, plus the power of
/// the maximal ideal that truncates above the socle.
Ideal apolar_annihilator(const Polynomial& form, int maxdeg);

/// Dense form of the given degree with seeded nonzero coefficients.
Polynomial random_dense_form(const RingPtr& ring, int degree, std::uint64_t seed);

} // namespace gorlink

#endif

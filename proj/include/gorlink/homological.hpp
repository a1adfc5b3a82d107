#ifndef GORLINK_HOMOLOGICAL_HPP
#define GORLINK_HOMOLOGICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gorlink/graded.hpp"
#include "gorlink/ideal.hpp"

namespace gorlink {

/// Columns generate ker(M); the generating set is a Groebner basis of
/// the kernel in the (flattened) Schreyer order induced by the columns.
GradedMatrix syzygies(const GradedMatrix& m);

/// Solve A * X = B over the ring; throws NoLift when some column of B
/// is not in the column module of A.
GradedMatrix matrix_lift(const GradedMatrix& a, const GradedMatrix& b);
std::optional<GradedMatrix> try_matrix_lift(const GradedMatrix& a, const GradedMatrix& b);

/// Is every column of b in the column module of a?
bool columns_in_image(const GradedMatrix& a, const GradedMatrix& b);

/// Minimal graded free resolution of R/I (syzygy tower, then
/// minimalization).
ChainComplex resolve(const Ideal& i);

/// Split all unit entries off a complex that is exact in positive
/// degrees; homotopy-equivalent result with no unit entries.
ChainComplex minimalize(ChainComplex c);

/// Graded Betti table of a minimal complex (rejects complexes with
/// unit entries).
BettiTable betti(const ChainComplex& minimal);

/// Castelnuovo-Mumford regularity, ideal convention.
int regularity(const BettiTable& t);

/// Lemma-style cone with blocks [[d^G, phi],[0, -d^F]].
ChainComplex mapping_cone(const ChainMap& phi);

/// Entrywise transpose, reversed arrows, twists negated then shifted
/// by s.
ChainComplex dual_twist(const ChainComplex& c, int s);

/// Comparison map between resolutions extending phi0 on the degree-0
/// modules, built degree by degree via matrix_lift.
ChainMap lift_chain_map(const ChainComplex& f, const ChainComplex& g, const GradedMatrix& phi0);

/// Maps h_i : F_i -> G_{i+1} with phi_i = h_{i-1} d^F_i + d^G_{i+1} h_i.
std::vector<GradedMatrix> null_homotopy(const ChainMap& phi);

struct VerifyResult {
    bool ok = false;
    std::string witness;
};

/// Fully symbolic exactness certification: d*d = 0, the augmentation
/// ideal equals I, and every syzygy of d_i lies in the image of
/// d_{i+1}.
VerifyResult verify_resolution(const ChainComplex& c, const Ideal& i);

/// Resolution of (b, y) from a resolution of R/b and an element y that
/// is regular mod b, with block layout
///   d_1 = [b_1  y],   d_i = [[b_i, (-1)^{i-1} y I], [0, b_{i-1}]].
ChainComplex extend_resolution_by_element(const ChainComplex& b, const Polynomial& y);

/// Ideal generated by the entries of the first differential.
Ideal augmentation_ideal(const ChainComplex& c);

} // namespace gorlink

#endif

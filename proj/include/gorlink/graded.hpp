#ifndef GORLINK_GRADED_HPP
#define GORLINK_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "gorlink/modvec.hpp"
#include "gorlink/polynomial.hpp"

namespace gorlink {

/// Twisted graded free module: degrees[i] = d_i means the module is
/// the direct sum of R(-d_i). Basis order is significant.
class GradedFreeModule {
public:
    GradedFreeModule() = default;
    GradedFreeModule(RingPtr ring, std::vector<int> degrees)
        : ring_(std::move(ring)), degs_(std::move(degrees)) {}

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(degs_.size()); }
    const std::vector<int>& degrees() const { return degs_; }
    int degree(int i) const { return degs_[i]; }

    /// M(s): generator degrees drop by s.
    GradedFreeModule twist(int s) const;
    /// Dual module M* = Hom(M, R): degrees negate.
    GradedFreeModule dual() const;
    GradedFreeModule direct_sum(const GradedFreeModule& o) const;

    bool operator==(const GradedFreeModule& o) const { return degs_ == o.degs_; }
    bool operator!=(const GradedFreeModule& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<int> degs_;
};

/// Degree-zero homogeneous map between graded free modules, stored as
/// an entry grid (rows indexed by the target). Entry (i, j) is zero or
/// homogeneous of degree source_degree(j) - target_degree(i).
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(GradedFreeModule source, GradedFreeModule target,
                 std::vector<std::vector<Polynomial>> entries);

    static GradedMatrix zero(GradedFreeModule source, GradedFreeModule target);
    static GradedMatrix identity(const GradedFreeModule& m);
    /// Multiplication by f landing in `target_module`: the map
    /// M(-deg f) -> M with f on the diagonal.
    static GradedMatrix scalar_mul(const GradedFreeModule& target_module, const Polynomial& f);
    /// Assemble from a grid of blocks (empty blocks allowed when a
    /// summand has rank zero).
    static GradedMatrix from_blocks(const std::vector<GradedFreeModule>& sources,
                                    const std::vector<GradedFreeModule>& targets,
                                    const std::vector<std::vector<const GradedMatrix*>>& blocks);
    /// Rebuild a matrix from homogeneous module-vector columns over the
    /// given target (source degrees are inferred).
    static GradedMatrix from_columns(const GradedFreeModule& target,
                                     const std::vector<ModVec>& columns);

    const GradedFreeModule& source() const { return src_; }
    const GradedFreeModule& target() const { return tgt_; }
    int rows() const { return tgt_.rank(); }
    int cols() const { return src_.rank(); }
    const Polynomial& entry(int i, int j) const { return e_[i][j]; }
    const std::vector<std::vector<Polynomial>>& entries() const { return e_; }

    bool is_zero() const;
    /// Position of some unit (nonzero degree-0) entry, or nullopt.
    std::optional<std::pair<int, int>> find_unit() const;

    GradedMatrix compose(const GradedMatrix& inner) const; // this * inner
    GradedMatrix add(const GradedMatrix& o) const;
    GradedMatrix sub(const GradedMatrix& o) const;
    GradedMatrix negated() const;
    GradedMatrix scaled(const Polynomial& f) const; // entries *= f, source twisted
    GradedMatrix twist(int s) const;
    GradedMatrix transpose_dual() const; // map target* -> source*

    GradedMatrix drop_row(int i) const;
    GradedMatrix drop_col(int j) const;

    ModVec column(int j) const;
    std::vector<ModVec> columns() const;

    bool equal(const GradedMatrix& o) const;
    std::string str() const;

private:
    GradedFreeModule src_, tgt_;
    std::vector<std::vector<Polynomial>> e_;
};

/// d_i : F_i -> F_{i-1}; diffs()[0] is d_1. The augmentation module
/// F_0 is stored explicitly so a zero-length complex is representable.
class ChainComplex {
public:
    ChainComplex() = default;
    explicit ChainComplex(GradedFreeModule f0) : f0_(std::move(f0)) {}
    ChainComplex(GradedFreeModule f0, std::vector<GradedMatrix> diffs);

    int length() const { return static_cast<int>(d_.size()); }
    const GradedFreeModule& module(int i) const;
    const GradedMatrix& diff(int i) const { return d_[i - 1]; } // 1-based
    const std::vector<GradedMatrix>& diffs() const { return d_; }

    /// Throws ComplexCheckFailed unless d*d = 0.
    void check_complex() const;

    ChainComplex twist(int s) const;
    /// Drop trailing rank-zero modules.
    ChainComplex trimmed() const;

    std::string betti_line() const; // compact "ranks at twists" summary

private:
    GradedFreeModule f0_;
    std::vector<GradedMatrix> d_;
};

/// Chain map phi_i : F_i -> G_i with commuting squares
/// d^G_i phi_i = phi_{i-1} d^F_i.
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(ChainComplex source, ChainComplex target, std::vector<GradedMatrix> maps);

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }
    const GradedMatrix& map(int i) const { return maps_[i]; }
    const std::vector<GradedMatrix>& maps() const { return maps_; }
    int top() const { return static_cast<int>(maps_.size()) - 1; }

    void check_squares() const;

private:
    ChainComplex src_, tgt_;
    std::vector<GradedMatrix> maps_;
};

/// Graded Betti numbers beta_{i,j} in the R/I convention (column 0 is
/// the free cover of R/I).
class BettiTable {
public:
    BettiTable() = default;
    explicit BettiTable(std::map<std::pair<int, int>, std::int64_t> b) : b_(std::move(b)) {}

    const std::map<std::pair<int, int>, std::int64_t>& data() const { return b_; }
    std::int64_t at(int i, int j) const;
    int projective_dimension() const;

    /// Regularity in the ideal convention:
    /// max{ j - i : beta_{i,j}(I) != 0 } with beta_{i,j}(I) = beta_{i+1,j}(R/I).
    int regularity_ideal() const;

    /// Ranks of the ideal resolution (index 0 = generators of I).
    std::vector<std::int64_t> ideal_ranks() const;

    /// Macaulay-style grid: rows j - i, columns i.
    std::string grid() const;

    bool operator==(const BettiTable& o) const { return b_ == o.b_; }

private:
    std::map<std::pair<int, int>, std::int64_t> b_;
};

} // namespace gorlink

#endif

#include "gorlink/graded.hpp"

#include <algorithm>
#include <sstream>

namespace gorlink {

GradedFreeModule GradedFreeModule::twist(int s) const {
    std::vector<int> d = degs_;
    for (int& x : d) x -= s;
    return GradedFreeModule(ring_, std::move(d));
}

GradedFreeModule GradedFreeModule::dual() const {
    std::vector<int> d = degs_;
    for (int& x : d) x = -x;
    return GradedFreeModule(ring_, std::move(d));
}

GradedFreeModule GradedFreeModule::direct_sum(const GradedFreeModule& o) const {
    std::vector<int> d = degs_;
    d.insert(d.end(), o.degs_.begin(), o.degs_.end());
    return GradedFreeModule(ring_ ? ring_ : o.ring_, std::move(d));
}

GradedMatrix::GradedMatrix(GradedFreeModule source, GradedFreeModule target,
                           std::vector<std::vector<Polynomial>> entries)
    : src_(std::move(source)), tgt_(std::move(target)), e_(std::move(entries)) {
    if (static_cast<int>(e_.size()) != tgt_.rank())
        throw PrecondFailed("graded matrix row count differs from target rank");
    for (int i = 0; i < tgt_.rank(); ++i) {
        if (static_cast<int>(e_[i].size()) != src_.rank())
            throw PrecondFailed("graded matrix column count differs from source rank");
        for (int j = 0; j < src_.rank(); ++j) {
            const Polynomial& p = e_[i][j];
            if (p.is_zero()) continue;
            auto d = p.homogeneous_degree();
            if (!d || *d != src_.degree(j) - tgt_.degree(i))
                throw PrecondFailed("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is not homogeneous of degree " +
                                    std::to_string(src_.degree(j) - tgt_.degree(i)) + ": " + p.str());
        }
    }
}

GradedMatrix GradedMatrix::zero(GradedFreeModule source, GradedFreeModule target) {
    const RingPtr& ring = source.ring() ? source.ring() : target.ring();
    std::vector<std::vector<Polynomial>> e(
        target.rank(), std::vector<Polynomial>(source.rank(), Polynomial::zero(ring)));
    return GradedMatrix(std::move(source), std::move(target), std::move(e));
}

GradedMatrix GradedMatrix::identity(const GradedFreeModule& m) {
    GradedMatrix z = zero(m, m);
    for (int i = 0; i < m.rank(); ++i) z.e_[i][i] = Polynomial::constant(m.ring(), 1);
    return z;
}

GradedMatrix GradedMatrix::scalar_mul(const GradedFreeModule& target_module, const Polynomial& f) {
    auto d = f.homogeneous_degree();
    if (!d && !f.is_zero()) throw PrecondFailed("scalar multiplication by an inhomogeneous element");
    GradedFreeModule source = target_module.twist(f.is_zero() ? 0 : -*d);
    GradedMatrix z = zero(source, target_module);
    for (int i = 0; i < target_module.rank(); ++i) z.e_[i][i] = f;
    return z;
}

GradedMatrix GradedMatrix::from_blocks(const std::vector<GradedFreeModule>& sources,
                                       const std::vector<GradedFreeModule>& targets,
                                       const std::vector<std::vector<const GradedMatrix*>>& blocks) {
    GradedFreeModule src, tgt;
    for (const auto& s : sources) src = src.rank() == 0 && !src.ring() ? s : src.direct_sum(s);
    for (const auto& t : targets) tgt = tgt.rank() == 0 && !tgt.ring() ? t : tgt.direct_sum(t);
    const RingPtr& ring = src.ring() ? src.ring() : tgt.ring();
    std::vector<std::vector<Polynomial>> e(
        tgt.rank(), std::vector<Polynomial>(src.rank(), Polynomial::zero(ring)));
    int row0 = 0;
    for (std::size_t bi = 0; bi < targets.size(); ++bi) {
        int col0 = 0;
        for (std::size_t bj = 0; bj < sources.size(); ++bj) {
            const GradedMatrix* blk = blocks[bi][bj];
            if (blk != nullptr) {
                if (blk->rows() != targets[bi].rank() || blk->cols() != sources[bj].rank())
                    throw PrecondFailed("block shape mismatch in matrix assembly");
                for (int i = 0; i < blk->rows(); ++i)
                    for (int j = 0; j < blk->cols(); ++j) e[row0 + i][col0 + j] = blk->entry(i, j);
            }
            col0 += sources[bj].rank();
        }
        row0 += targets[bi].rank();
    }
    return GradedMatrix(std::move(src), std::move(tgt), std::move(e));
}

GradedMatrix GradedMatrix::from_columns(const GradedFreeModule& target,
                                        const std::vector<ModVec>& columns) {
    const RingPtr& ring = target.ring();
    std::vector<int> src_degs;
    for (const auto& c : columns) {
        if (c.empty()) throw PrecondFailed("zero column has no well-defined degree");
        int d = c.front().mon.degree() + target.degree(c.front().comp);
        for (const auto& t : c)
            if (t.mon.degree() + target.degree(t.comp) != d)
                throw PrecondFailed("inhomogeneous column in matrix assembly");
        src_degs.push_back(d);
    }
    GradedFreeModule src(ring, std::move(src_degs));
    std::vector<std::vector<Polynomial>> e(
        target.rank(), std::vector<Polynomial>(src.rank(), Polynomial::zero(ring)));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        std::vector<std::vector<Term>> rows(target.rank());
        for (const auto& t : columns[j]) rows[t.comp].push_back({t.mon, t.coeff});
        for (int i = 0; i < target.rank(); ++i)
            if (!rows[i].empty())
                e[i][j] = Polynomial::from_terms(ring, std::move(rows[i]));
    }
    return GradedMatrix(std::move(src), target, std::move(e));
}

bool GradedMatrix::is_zero() const {
    for (const auto& row : e_)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

std::optional<std::pair<int, int>> GradedMatrix::find_unit() const {
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const Polynomial& p = e_[i][j];
            if (!p.is_zero() && p.term_count() == 1 && p.lead_monomial().is_one())
                return std::make_pair(i, j);
        }
    return std::nullopt;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& inner) const {
    if (inner.tgt_ != src_) throw PrecondFailed("composition shape mismatch");
    const RingPtr& ring = src_.ring() ? src_.ring() : tgt_.ring();
    std::vector<std::vector<Polynomial>> e(
        rows(), std::vector<Polynomial>(inner.cols(), Polynomial::zero(ring)));
    for (int i = 0; i < rows(); ++i)
        for (int k = 0; k < cols(); ++k) {
            if (e_[i][k].is_zero()) continue;
            for (int j = 0; j < inner.cols(); ++j) {
                if (inner.e_[k][j].is_zero()) continue;
                e[i][j] = e[i][j] + e_[i][k] * inner.e_[k][j];
            }
        }
    return GradedMatrix(inner.src_, tgt_, std::move(e));
}

GradedMatrix GradedMatrix::add(const GradedMatrix& o) const {
    if (o.src_ != src_ || o.tgt_ != tgt_) throw PrecondFailed("matrix sum shape mismatch");
    auto e = e_;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) e[i][j] = e[i][j] + o.e_[i][j];
    return GradedMatrix(src_, tgt_, std::move(e));
}

GradedMatrix GradedMatrix::sub(const GradedMatrix& o) const { return add(o.negated()); }

GradedMatrix GradedMatrix::negated() const {
    auto e = e_;
    for (auto& row : e)
        for (auto& p : row) p = -p;
    return GradedMatrix(src_, tgt_, std::move(e));
}

GradedMatrix GradedMatrix::scaled(const Polynomial& f) const {
    auto d = f.homogeneous_degree();
    if (!d) throw PrecondFailed("matrix scaling by an inhomogeneous element");
    auto e = e_;
    for (auto& row : e)
        for (auto& p : row) p = p * f;
    return GradedMatrix(src_.twist(-*d), tgt_, std::move(e));
}

GradedMatrix GradedMatrix::twist(int s) const {
    return GradedMatrix(src_.twist(s), tgt_.twist(s), e_);
}

GradedMatrix GradedMatrix::transpose_dual() const {
    std::vector<std::vector<Polynomial>> e(
        cols(), std::vector<Polynomial>(rows(), Polynomial::zero(src_.ring())));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) e[j][i] = e_[i][j];
    return GradedMatrix(tgt_.dual(), src_.dual(), std::move(e));
}

GradedMatrix GradedMatrix::drop_row(int r) const {
    std::vector<int> degs;
    for (int i = 0; i < rows(); ++i)
        if (i != r) degs.push_back(tgt_.degree(i));
    std::vector<std::vector<Polynomial>> e;
    for (int i = 0; i < rows(); ++i)
        if (i != r) e.push_back(e_[i]);
    return GradedMatrix(src_, GradedFreeModule(tgt_.ring(), std::move(degs)), std::move(e));
}

GradedMatrix GradedMatrix::drop_col(int c) const {
    std::vector<int> degs;
    for (int j = 0; j < cols(); ++j)
        if (j != c) degs.push_back(src_.degree(j));
    std::vector<std::vector<Polynomial>> e(rows());
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (j != c) e[i].push_back(e_[i][j]);
    return GradedMatrix(GradedFreeModule(src_.ring(), std::move(degs)), tgt_, std::move(e));
}

ModVec GradedMatrix::column(int j) const {
    ModVec v;
    for (int i = 0; i < rows(); ++i)
        for (const auto& t : e_[i][j].terms()) v.push_back({t.mon, i, t.coeff});
    return v;
}

std::vector<ModVec> GradedMatrix::columns() const {
    std::vector<ModVec> out;
    out.reserve(cols());
    for (int j = 0; j < cols(); ++j) out.push_back(column(j));
    return out;
}

bool GradedMatrix::equal(const GradedMatrix& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) return false;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (e_[i][j] != o.e_[i][j]) return false;
    return true;
}

std::string GradedMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < cols(); ++j) {
            if (j) os << ", ";
            os << e_[i][j].str();
        }
        os << "]";
        os << (i + 1 == rows() ? "]" : "\n");
    }
    if (rows() == 0) os << "[]";
    return os.str();
}

ChainComplex::ChainComplex(GradedFreeModule f0, std::vector<GradedMatrix> diffs)
    : f0_(std::move(f0)), d_(std::move(diffs)) {
    if (!d_.empty() && d_[0].target() != f0_)
        throw PrecondFailed("first differential does not land in the augmentation module");
    for (std::size_t i = 0; i + 1 < d_.size(); ++i)
        if (d_[i + 1].target() != d_[i].source())
            throw PrecondFailed("chain complex modules do not line up");
}

const GradedFreeModule& ChainComplex::module(int i) const {
    if (i == 0) return f0_;
    return d_[i - 1].source();
}

void ChainComplex::check_complex() const {
    for (std::size_t i = 0; i + 1 < d_.size(); ++i)
        if (!d_[i].compose(d_[i + 1]).is_zero())
            throw ComplexCheckFailed("d*d != 0 at homological degree " + std::to_string(i + 2));
}

ChainComplex ChainComplex::twist(int s) const {
    std::vector<GradedMatrix> d;
    d.reserve(d_.size());
    for (const auto& m : d_) d.push_back(m.twist(s));
    return ChainComplex(f0_.twist(s), std::move(d));
}

ChainComplex ChainComplex::trimmed() const {
    std::vector<GradedMatrix> d = d_;
    while (!d.empty() && d.back().source().rank() == 0) d.pop_back();
    return ChainComplex(f0_, std::move(d));
}

std::string ChainComplex::betti_line() const {
    std::ostringstream os;
    for (int i = 0; i <= length(); ++i) {
        if (i) os << " <- ";
        const auto& m = module(i);
        std::map<int, int> count;
        for (int x : m.degrees()) count[x]++;
        os << "F" << i << "=";
        if (m.rank() == 0) {
            os << "0";
        } else {
            bool first = true;
            for (auto& [deg, c] : count) {
                if (!first) os << "+";
                os << "R(" << -deg << ")";
                if (c > 1) os << "^" << c;
                first = false;
            }
        }
    }
    return os.str();
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<GradedMatrix> maps)
    : src_(std::move(source)), tgt_(std::move(target)), maps_(std::move(maps)) {
    if (maps_.empty()) throw PrecondFailed("chain map needs at least the degree-0 map");
}

void ChainMap::check_squares() const {
    for (std::size_t i = 1; i < maps_.size(); ++i) {
        const GradedMatrix& left = tgt_.diff(static_cast<int>(i)).compose(maps_[i]);
        const GradedMatrix& right = maps_[i - 1].compose(src_.diff(static_cast<int>(i)));
        if (!left.sub(right).is_zero())
            throw PrecondFailed("chain map square does not commute at degree " + std::to_string(i));
    }
}

std::int64_t BettiTable::at(int i, int j) const {
    auto it = b_.find({i, j});
    return it == b_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (auto& [k, v] : b_)
        if (v != 0) pd = std::max(pd, k.first);
    return pd;
}

int BettiTable::regularity_ideal() const {
    int reg = 0;
    bool any = false;
    for (auto& [k, v] : b_) {
        if (v == 0 || k.first == 0) continue;
        reg = any ? std::max(reg, k.second - (k.first - 1)) : k.second - (k.first - 1);
        any = true;
    }
    if (!any) throw PrecondFailed("regularity of the zero ideal");
    return reg;
}

std::vector<std::int64_t> BettiTable::ideal_ranks() const {
    std::vector<std::int64_t> r(projective_dimension(), 0);
    for (auto& [k, v] : b_)
        if (k.first >= 1) r[k.first - 1] += v;
    return r;
}

std::string BettiTable::grid() const {
    int pd = projective_dimension();
    int lo = 0, hi = 0;
    bool any = false;
    for (auto& [k, v] : b_) {
        if (v == 0) continue;
        int row = k.second - k.first;
        lo = any ? std::min(lo, row) : row;
        hi = any ? std::max(hi, row) : row;
        any = true;
    }
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= pd; ++i) os << i << "\t";
    os << "\n";
    for (int row = lo; row <= hi; ++row) {
        os << row << ":    ";
        for (int i = 0; i <= pd; ++i) {
            std::int64_t v = at(i, row + i);
            os << (v ? std::to_string(v) : ".") << "\t";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace gorlink

#include "gorlink/linalg.hpp"

#include <algorithm>

namespace gorlink {

namespace {

RingPtr matrix_ring(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.ring()) return e.ring();
    throw PrecondFailed("matrix has no ring context");
}

} // namespace

Polynomial determinant(const PolyMatrix& m) {
    const std::size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k) throw PrecondFailed("determinant of a non-square matrix");
    RingPtr ring = matrix_ring(m);
    if (k == 0) return Polynomial::constant(ring, 1);
    if (k > 16) throw PrecondFailed("determinant size cap (16) exceeded");

    // f[mask] = det of the first popcount(mask) rows on columns `mask`
    std::vector<Polynomial> f(std::size_t{1} << k);
    f[0] = Polynomial::constant(ring, 1);
    for (std::size_t mask = 1; mask < f.size(); ++mask) {
        int r = __builtin_popcountll(mask) - 1;
        Polynomial det = Polynomial::zero(ring);
        int pos = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask >> j & 1)) continue;
            if (!m[r][j].is_zero()) {
                Polynomial sub = f[mask ^ (std::size_t{1} << j)] * m[r][j];
                det = ((r + pos) % 2 == 0) ? det + sub : det - sub;
            }
            ++pos;
        }
        f[mask] = std::move(det);
    }
    return f.back();
}

bool is_skew_symmetric(const PolyMatrix& m) {
    const std::size_t k = m.size();
    for (const auto& row : m)
        if (row.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (!m[i][i].is_zero()) return false;
        for (std::size_t j = i + 1; j < k; ++j)
            if (m[i][j] != -m[j][i]) return false;
    }
    return true;
}

Polynomial pfaffian(const PolyMatrix& m, const std::vector<int>& rows) {
    if (!is_skew_symmetric(m)) throw PrecondFailed("pfaffian of a non-skew-symmetric matrix");
    if (rows.size() % 2 != 0) throw PrecondFailed("pfaffian needs an even index subset");
    RingPtr ring = matrix_ring(m);
    std::vector<int> idx = rows;
    std::sort(idx.begin(), idx.end());
    for (int i : idx)
        if (i < 0 || i >= static_cast<int>(m.size())) throw PrecondFailed("pfaffian index out of range");

    auto rec = [&](auto&& self, const std::vector<int>& s) -> Polynomial {
        if (s.empty()) return Polynomial::constant(ring, 1);
        Polynomial acc = Polynomial::zero(ring);
        int i0 = s[0];
        for (std::size_t j = 1; j < s.size(); ++j) {
            if (m[i0][s[j]].is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(s.size() - 2);
            for (std::size_t t = 1; t < s.size(); ++t)
                if (t != j) rest.push_back(s[t]);
            Polynomial sub = self(self, rest) * m[i0][s[j]];
            // sign (-1)^{j} with columns counted from 1 starting at the
            // partner right after i0
            acc = (j % 2 == 1) ? acc + sub : acc - sub;
        }
        return acc;
    };
    return rec(rec, idx);
}

Polynomial pfaffian(const PolyMatrix& m) {
    std::vector<int> all(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) all[i] = static_cast<int>(i);
    return pfaffian(m, all);
}

std::vector<int> rref(const Field& f, std::vector<std::vector<Scalar>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Scalar inv = FieldOps::inv(f, m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = FieldOps::mul(f, m[r][j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar factor = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] = FieldOps::sub(f, m[i][j], FieldOps::mul(f, factor, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::vector<std::vector<Scalar>> kernel_basis(const Field& f, std::vector<std::vector<Scalar>> m,
                                              int ncols) {
    std::vector<int> pivots = rref(f, m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(ncols, Scalar::from_int(f, 0));
        v[c] = Scalar::from_int(f, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = FieldOps::neg(f, m[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gorlink

#include "gorlink/homological.hpp"

#include <algorithm>

#include "gorlink/groebner.hpp"

namespace gorlink {

namespace {

// lead term of a column under the given order on the target, nullopt
// for a zero column
std::optional<ModTerm> column_lead(const ModVec& col, const ModuleOrder& ord) {
    if (col.empty()) return std::nullopt;
    ModTerm best = col[0];
    for (const auto& t : col)
        if (ord.cmp(t, best) > 0) best = t;
    return best;
}

struct SyzygyOutput {
    GradedMatrix matrix;
    // Schreyer order on the source of the input matrix, i.e. on the
    // target of the syzygy matrix; main order for the next level
    std::vector<Monomial> weights;
    std::vector<int> ties;
};

// syzygies of the columns of m, Groebner under the tag-block
// elimination order whose main block carries `main_ord`
SyzygyOutput syzygies_ordered(const GradedMatrix& m, const ModuleOrder& main_ord) {
    const RingPtr& ring = m.target().ring();
    const int r = m.rows();
    const int k = m.cols();

    std::vector<ModVec> raw_cols = m.columns();
    std::vector<Monomial> tag_w(k, Monomial::one());
    std::vector<int> tag_tie(k);
    for (int j = 0; j < k; ++j) {
        tag_tie[j] = j;
        if (auto lt = column_lead(raw_cols[j], main_ord))
            tag_w[j] = lt->mon.mul(main_ord.weight(lt->comp));
    }
    ModuleOrder aug = main_ord.with_tag_block(tag_w, tag_tie);

    std::vector<ModVec> gens;
    gens.reserve(k);
    const Field& field = ring->field();
    for (int j = 0; j < k; ++j) {
        std::vector<ModTerm> terms = raw_cols[j];
        terms.push_back({Monomial::one(), r + j, Scalar::from_int(field, 1)});
        gens.push_back(mv_from_terms(aug, std::move(terms)));
    }
    std::vector<int> compdeg = m.target().degrees();
    compdeg.insert(compdeg.end(), m.source().degrees().begin(), m.source().degrees().end());

    ModuleGB gb = module_groebner(std::move(gens), aug, compdeg);

    // pure-tag elements form a GB of the syzygy module
    ModuleOrder tag_ord = ModuleOrder::schreyer(ring, tag_w, tag_tie);
    std::vector<ModVec> syz;
    for (const auto& v : gb.basis) {
        if (v.front().comp < r) continue;
        syz.push_back(mv_from_terms(tag_ord, mv_slice(v, r, r + k)));
    }
    // canonical column order: by degree, then by lead
    auto col_degree = [&](const ModVec& v) {
        return v.front().mon.degree() + m.source().degree(v.front().comp);
    };
    std::sort(syz.begin(), syz.end(), [&](const ModVec& a, const ModVec& b) {
        int da = col_degree(a), db = col_degree(b);
        if (da != db) return da < db;
        return tag_ord.cmp(a.front(), b.front()) < 0;
    });

    SyzygyOutput out{syz.empty() ? GradedMatrix::zero(GradedFreeModule(ring, {}), m.source())
                                 : GradedMatrix::from_columns(m.source(), syz),
                     tag_w, tag_tie};
    return out;
}

// tagged basis of the column module of A, for lifting
struct TaggedBasis {
    ModuleGB gb;
    int main_rank;
    TaggedBasis(ModuleGB g, int r) : gb(std::move(g)), main_rank(r) {}
};

TaggedBasis make_tagged_basis(const GradedMatrix& a) {
    const RingPtr& ring = a.target().ring();
    const int r = a.rows();
    const int k = a.cols();
    ModuleOrder main_ord = ModuleOrder::top(ring, r);
    std::vector<ModVec> raw_cols = a.columns();
    std::vector<Monomial> tag_w(k, Monomial::one());
    std::vector<int> tag_tie(k);
    for (int j = 0; j < k; ++j) {
        tag_tie[j] = j;
        if (auto lt = column_lead(raw_cols[j], main_ord)) tag_w[j] = lt->mon;
    }
    ModuleOrder aug = main_ord.with_tag_block(tag_w, tag_tie);
    std::vector<ModVec> gens;
    const Field& field = ring->field();
    for (int j = 0; j < k; ++j) {
        std::vector<ModTerm> terms = raw_cols[j];
        terms.push_back({Monomial::one(), r + j, Scalar::from_int(field, 1)});
        gens.push_back(mv_from_terms(aug, std::move(terms)));
    }
    std::vector<int> compdeg = a.target().degrees();
    compdeg.insert(compdeg.end(), a.source().degrees().begin(), a.source().degrees().end());
    return TaggedBasis(module_groebner(std::move(gens), aug, compdeg), r);
}

// reduce an embedded target vector; returns {main normal form, -lift}
std::pair<ModVec, ModVec> tagged_reduce(const TaggedBasis& tb, const ModVec& target_vec) {
    ModVec v = mv_from_terms(tb.gb.ord, std::vector<ModTerm>(target_vec));
    ModVec nf = module_normal_form(std::move(v), tb.gb);
    ModVec main, tag;
    for (const auto& t : nf) {
        if (t.comp < tb.main_rank)
            main.push_back(t);
        else
            tag.push_back({t.mon, t.comp - tb.main_rank, t.coeff});
    }
    return {std::move(main), std::move(tag)};
}

} // namespace

GradedMatrix syzygies(const GradedMatrix& m) {
    return syzygies_ordered(m, ModuleOrder::top(m.target().ring(), m.rows())).matrix;
}

std::optional<GradedMatrix> try_matrix_lift(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.target() != b.target()) return std::nullopt;
    const RingPtr& ring = a.target().ring();
    TaggedBasis tb = make_tagged_basis(a);
    std::vector<std::vector<Polynomial>> x(
        a.cols(), std::vector<Polynomial>(b.cols(), Polynomial::zero(ring)));
    for (int j = 0; j < b.cols(); ++j) {
        auto [main, tag] = tagged_reduce(tb, b.column(j));
        if (!main.empty()) return std::nullopt;
        std::vector<std::vector<Term>> rows(a.cols());
        for (const auto& t : tag) rows[t.comp].push_back({t.mon, t.coeff});
        for (int i = 0; i < a.cols(); ++i)
            if (!rows[i].empty())
                x[i][j] = -Polynomial::from_terms(ring, std::move(rows[i]));
    }
    GradedMatrix lift(b.source(), a.source(), std::move(x));
    if (!a.compose(lift).sub(b).is_zero())
        throw InternalError("matrix lift verification failed");
    return lift;
}

GradedMatrix matrix_lift(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.target() != b.target())
        throw PrecondFailed("matrix lift requires equal targets");
    auto x = try_matrix_lift(a, b);
    if (!x) throw NoLift("columns are not in the column module of the left factor");
    return *x;
}

bool columns_in_image(const GradedMatrix& a, const GradedMatrix& b) {
    return try_matrix_lift(a, b).has_value();
}

ChainComplex resolve(const Ideal& ideal) {
    const RingPtr& ring = ideal.ring();
    GradedFreeModule f0(ring, {0});
    const auto& gb = ideal.reduced_gb();
    if (gb.empty()) return ChainComplex(f0);

    std::vector<int> degs;
    for (const auto& g : gb) degs.push_back(g.degree());
    std::vector<std::vector<Polynomial>> row(1, gb);
    GradedMatrix d1(GradedFreeModule(ring, std::move(degs)), f0, std::move(row));

    std::vector<GradedMatrix> diffs{d1};
    ModuleOrder cur_ord = ModuleOrder::top(ring, 1);
    const int cap = ring->nvars() + 3;
    while (true) {
        SyzygyOutput syz = syzygies_ordered(diffs.back(), cur_ord);
        if (syz.matrix.cols() == 0) break;
        diffs.push_back(syz.matrix);
        cur_ord = ModuleOrder::schreyer(ring, std::move(syz.weights), std::move(syz.ties));
        if (static_cast<int>(diffs.size()) > cap)
            throw InternalError("resolution exceeded the Hilbert syzygy bound");
    }
    ChainComplex c(f0, std::move(diffs));
    c.check_complex();
    ChainComplex minimal = minimalize(std::move(c));
    if (minimal.length() > ring->nvars())
        throw InternalError("minimal resolution longer than the number of variables");
    return minimal;
}

ChainComplex minimalize(ChainComplex c) {
    c.check_complex();
    std::vector<GradedMatrix> d = c.diffs();
    const Field& field = c.module(0).ring() ? c.module(0).ring()->field() : Field::rational();

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size() && !changed; ++i) {
            auto unit = d[i].find_unit();
            if (!unit) continue;
            changed = true;
            const auto [p, q] = *unit;
            const GradedMatrix& b = d[i];
            Scalar uinv = FieldOps::inv(field, b.entry(p, q).lead_coeff());

            // Schur complement on d_i, then delete the split row/column
            std::vector<std::vector<Polynomial>> e;
            std::vector<int> sdegs, tdegs;
            for (int rr = 0; rr < b.rows(); ++rr) {
                if (rr == p) continue;
                std::vector<Polynomial> row;
                for (int jj = 0; jj < b.cols(); ++jj) {
                    if (jj == q) continue;
                    Polynomial v = b.entry(rr, jj);
                    if (!b.entry(p, jj).is_zero() && !b.entry(rr, q).is_zero())
                        v = v - b.entry(p, jj).scaled(uinv) * b.entry(rr, q);
                    row.push_back(std::move(v));
                }
                e.push_back(std::move(row));
            }
            for (int jj = 0; jj < b.cols(); ++jj)
                if (jj != q) sdegs.push_back(b.source().degree(jj));
            for (int rr = 0; rr < b.rows(); ++rr)
                if (rr != p) tdegs.push_back(b.target().degree(rr));
            const RingPtr& ring = b.source().ring();
            GradedMatrix nb(GradedFreeModule(ring, std::move(sdegs)),
                            GradedFreeModule(ring, std::move(tdegs)), std::move(e));
            if (i + 1 < d.size()) d[i + 1] = d[i + 1].drop_row(q);
            if (i > 0) d[i - 1] = d[i - 1].drop_col(p);
            d[i] = std::move(nb);
        }
    }
    GradedFreeModule f0 = d.empty() ? c.module(0) : d[0].target();
    ChainComplex out(std::move(f0), std::move(d));
    out.check_complex();
    return out.trimmed();
}

BettiTable betti(const ChainComplex& c) {
    for (int i = 1; i <= c.length(); ++i)
        if (c.diff(i).find_unit())
            throw PrecondFailed("betti table of a non-minimal complex; minimalize first");
    std::map<std::pair<int, int>, std::int64_t> b;
    for (int i = 0; i <= c.length(); ++i)
        for (int deg : c.module(i).degrees()) b[{i, deg}]++;
    return BettiTable(std::move(b));
}

int regularity(const BettiTable& t) { return t.regularity_ideal(); }

ChainComplex mapping_cone(const ChainMap& phi) {
    phi.check_squares();
    const ChainComplex& f = phi.source();
    const ChainComplex& g = phi.target();
    const RingPtr& ring = g.module(0).ring();
    const int len = std::max(g.length(), f.length() + 1);

    auto fmod = [&](int i) {
        return i >= 0 && i <= f.length() ? f.module(i) : GradedFreeModule(ring, {});
    };
    auto gmod = [&](int i) { return i <= g.length() ? g.module(i) : GradedFreeModule(ring, {}); };
    auto fdiff = [&](int i) {
        if (i >= 1 && i <= f.length()) return f.diff(i);
        return GradedMatrix::zero(fmod(i), fmod(i - 1));
    };
    auto gdiff = [&](int i) {
        if (i <= g.length()) return g.diff(i);
        return GradedMatrix::zero(gmod(i), gmod(i - 1));
    };
    auto phimap = [&](int i) {
        if (i >= 0 && i <= phi.top() && i <= f.length()) return phi.map(i);
        return GradedMatrix::zero(fmod(i), gmod(i));
    };

    std::vector<GradedMatrix> diffs;
    for (int i = 1; i <= len; ++i) {
        GradedMatrix dg = gdiff(i);
        GradedMatrix ph = phimap(i - 1);
        if (i == 1) {
            diffs.push_back(GradedMatrix::from_blocks({gmod(1), fmod(0)}, {gmod(0)},
                                                      {{&dg, &ph}}));
            continue;
        }
        GradedMatrix df = fdiff(i - 1).negated();
        GradedMatrix z;
        diffs.push_back(GradedMatrix::from_blocks({gmod(i), fmod(i - 1)}, {gmod(i - 1), fmod(i - 2)},
                                                  {{&dg, &ph}, {nullptr, &df}}));
        (void)z;
    }
    ChainComplex cone(gmod(0), std::move(diffs));
    cone.check_complex();
    return cone;
}

ChainComplex dual_twist(const ChainComplex& c, int s) {
    const int n = c.length();
    std::vector<GradedMatrix> diffs;
    for (int j = 1; j <= n; ++j)
        diffs.push_back(c.diff(n - j + 1).transpose_dual().twist(s));
    GradedFreeModule f0 = c.module(n).dual().twist(s);
    ChainComplex out(std::move(f0), std::move(diffs));
    out.check_complex();
    return out;
}

ChainMap lift_chain_map(const ChainComplex& f, const ChainComplex& g, const GradedMatrix& phi0) {
    if (phi0.source() != f.module(0) || phi0.target() != g.module(0))
        throw PrecondFailed("base map of the lift has the wrong shape");
    std::vector<GradedMatrix> maps{phi0};
    const RingPtr& ring = g.module(0).ring();
    for (int i = 1; i <= f.length(); ++i) {
        GradedMatrix rhs = maps.back().compose(f.diff(i));
        if (i <= g.length()) {
            auto x = try_matrix_lift(g.diff(i), rhs);
            if (!x) throw NoLift("comparison map does not lift at degree " + std::to_string(i));
            maps.push_back(std::move(*x));
        } else {
            if (!rhs.is_zero())
                throw NoLift("comparison map does not vanish beyond the target length");
            maps.push_back(GradedMatrix::zero(f.module(i), GradedFreeModule(ring, {})));
        }
    }
    ChainMap out(f, g, std::move(maps));
    out.check_squares();
    return out;
}

std::vector<GradedMatrix> null_homotopy(const ChainMap& phi) {
    const ChainComplex& f = phi.source();
    const ChainComplex& g = phi.target();
    const RingPtr& ring = g.module(0).ring();
    std::vector<GradedMatrix> h;
    for (int i = 0; i <= f.length(); ++i) {
        GradedMatrix residual = phi.map(i);
        if (i >= 1) residual = residual.sub(h.back().compose(f.diff(i)));
        if (i + 1 <= g.length()) {
            auto x = try_matrix_lift(g.diff(i + 1), residual);
            if (!x) throw NoLift("no null homotopy at degree " + std::to_string(i));
            h.push_back(std::move(*x));
        } else {
            if (!residual.is_zero()) throw NoLift("no null homotopy at the top degree");
            h.push_back(GradedMatrix::zero(f.module(i), GradedFreeModule(ring, {})));
        }
    }
    return h;
}

Ideal augmentation_ideal(const ChainComplex& c) {
    const RingPtr& ring = c.module(0).ring();
    if (c.length() == 0) return Ideal::zero(ring);
    if (c.module(0).rank() != 1)
        throw PrecondFailed("augmentation ideal needs a rank-1 degree-0 module");
    std::vector<Polynomial> gens;
    for (int j = 0; j < c.diff(1).cols(); ++j) gens.push_back(c.diff(1).entry(0, j));
    return Ideal::make(ring, std::move(gens));
}

VerifyResult verify_resolution(const ChainComplex& c, const Ideal& ideal) {
    try {
        c.check_complex();
    } catch (const ComplexCheckFailed& e) {
        return {false, e.what()};
    }
    if (c.module(0).rank() != 1) return {false, "augmentation module has rank != 1"};
    if (c.length() == 0) {
        if (ideal.is_zero_ideal()) return {true, ""};
        return {false, "zero-length complex resolves R, not R/I"};
    }
    if (!ideal_equals(augmentation_ideal(c), ideal))
        return {false, "image of d_1 differs from the ideal"};
    for (int i = 1; i <= c.length(); ++i) {
        GradedMatrix syz = syzygies(c.diff(i));
        if (i < c.length()) {
            if (syz.cols() != 0 && !columns_in_image(c.diff(i + 1), syz))
                return {false, "syzygy of d_" + std::to_string(i) + " not in the image of d_" +
                                   std::to_string(i + 1)};
        } else {
            if (syz.cols() != 0)
                return {false, "nonzero kernel at the top module"};
        }
    }
    return {true, ""};
}

ChainComplex extend_resolution_by_element(const ChainComplex& b, const Polynomial& y) {
    auto e = y.homogeneous_degree();
    if (!e) throw PrecondFailed("extension element must be homogeneous and nonzero");
    const RingPtr& ring = b.module(0).ring();
    if (b.module(0).rank() != 1) throw PrecondFailed("extension needs a resolution of a cyclic module");
    const int g = b.length() + 1;

    auto bmod = [&](int i) {
        return i >= 0 && i <= b.length() ? b.module(i) : GradedFreeModule(ring, {});
    };
    auto bdiff = [&](int i) {
        if (i >= 1 && i <= b.length()) return b.diff(i);
        return GradedMatrix::zero(bmod(i), bmod(i - 1));
    };

    std::vector<GradedMatrix> diffs;
    for (int i = 1; i <= g; ++i) {
        GradedMatrix bi = bdiff(i);
        Polynomial ysign = (i % 2 == 1) ? y : -y; // (-1)^{i-1} y
        GradedMatrix yblk = GradedMatrix::scalar_mul(bmod(i - 1), ysign);
        GradedMatrix blower = bdiff(i - 1);
        GradedFreeModule src_b = bmod(i), src_y = bmod(i - 1).twist(-*e);
        GradedFreeModule tgt_b = bmod(i - 1), tgt_y = bmod(i - 2).twist(-*e);
        if (i == 1) {
            diffs.push_back(
                GradedMatrix::from_blocks({src_b, src_y}, {tgt_b}, {{&bi, &yblk}}));
        } else {
            GradedMatrix bl = blower.twist(-*e);
            diffs.push_back(GradedMatrix::from_blocks({src_b, src_y}, {tgt_b, tgt_y},
                                                      {{&bi, &yblk}, {nullptr, &bl}}));
        }
    }
    ChainComplex out(bmod(0), std::move(diffs));
    out.check_complex();
    return out;
}

} // namespace gorlink

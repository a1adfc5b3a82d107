#include "gorlink/generators.hpp"

#include <random>

namespace gorlink {

Polynomial extract_f(const Ideal& b, const Polynomial& y, const Polynomial& omega,
                     const Polynomial& z_target) {
    const RingPtr& ring = b.ring();
    std::vector<Polynomial> cols = b.gens();
    cols.push_back(y);
    cols.push_back(omega);
    std::vector<int> degs;
    for (const auto& c : cols) degs.push_back(c.degree());
    GradedMatrix m(GradedFreeModule(ring, std::move(degs)), GradedFreeModule(ring, {0}),
                   {cols});
    GradedMatrix zt(GradedFreeModule(ring, {z_target.degree()}), GradedFreeModule(ring, {0}),
                    {{z_target}});
    auto x = try_matrix_lift(m, zt);
    if (!x) throw PrecondFailed("target element is not in b + (y) + (omega)");
    Polynomial p = x->entry(x->rows() - 2, 0);
    Polynomial c = x->entry(x->rows() - 1, 0);
    if (c.is_zero())
        throw PrecondFailed("target linking element lies in (b, y); no f reproduces it");
    if (c.degree() != 0) throw InternalError("omega cofactor must be a scalar");
    return p.scaled(FieldOps::inv(ring->field(), c.lead_coeff()));
}

CIFamilyResult gen_ci_family(const Field& field, const std::vector<int>& m,
                             const std::vector<int>& n, const BiliaisonOptions& opts) {
    const int g = static_cast<int>(n.size());
    if (static_cast<int>(m.size()) != g - 1 || g < 2)
        throw PrecondFailed("need exponent vectors of lengths g-1 and g with g >= 2");
    int d = 0;
    for (int i = 0; i < g - 1; ++i) {
        if (m[i] < n[i] || n[i] < 1) throw PrecondFailed("need m_i >= n_i >= 1");
        d += m[i] - n[i];
    }
    d -= n[g - 1];
    if (n[g - 1] < 1) throw PrecondFailed("need n_g >= 1");
    if (d < 0) throw PrecondFailed("d = sum(m) - sum(n) is negative");

    std::vector<std::string> names;
    for (int i = 1; i <= g; ++i) names.push_back("x" + std::to_string(i));
    RingPtr ring = PolyRing::make(field, names);

    CIFamilyResult out;
    std::vector<Polynomial> bg, ag;
    for (int i = 0; i < g - 1; ++i) bg.push_back(Polynomial::variable(ring, i, m[i]));
    for (int i = 0; i < g; ++i) ag.push_back(Polynomial::variable(ring, i, n[i]));
    out.b = Ideal::make(ring, bg);
    out.a = Ideal::make(ring, ag);
    out.y = Polynomial::variable(ring, g - 1, n[g - 1]);
    out.c = Polynomial::constant(ring, 1);
    for (int i = 0; i < g - 1; ++i)
        if (m[i] > n[i]) out.c = out.c * Polynomial::variable(ring, i, m[i] - n[i]);

    out.run = two_link_construct(out.a, out.b, out.y, opts);
    const Polynomial& f = out.run.f;
    std::vector<Polynomial> egens = bg;
    for (int i = 0; i < g - 1; ++i) egens.push_back(f * ag[i]);
    egens.push_back(out.c + f * out.y);
    out.expected = Ideal::make(ring, std::move(egens));
    out.matches_expected = ideal_equals(out.run.ideal, out.expected);
    return out;
}

SallyResult gen_sally(const Field& field, int n, const std::vector<std::int64_t>& units) {
    if (n < 2) throw PrecondFailed("Sally family needs n >= 2");
    if (static_cast<int>(units.size()) != n - 1)
        throw PrecondFailed("need n-1 units");
    for (auto c : units)
        if (Scalar::from_int(field, c).is_zero()) throw PrecondFailed("unit parameter is zero");

    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    RingPtr ring = PolyRing::make(field, names);
    const Field& f = field;

    auto var = [&](int i, int p = 1) { return Polynomial::variable(ring, i, p); };
    Scalar clast = Scalar::from_int(f, units[n - 2]);
    Scalar clast_inv = FieldOps::inv(f, clast);

    // b: the Sally pattern one size down, socle variable x_{n-1},
    // constants c_k / c_{n-1}
    std::vector<Polynomial> bg;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) bg.push_back(var(i) * var(j));
    for (int k = 0; k < n - 2; ++k) {
        Scalar ck = FieldOps::mul(f, Scalar::from_int(f, units[k]), clast_inv);
        bg.push_back(var(k, 2) - var(n - 2, 2).scaled(ck));
    }

    SallyResult out;
    out.b = Ideal::make(ring, bg);
    std::vector<Polynomial> ag;
    for (int i = 0; i < n; ++i) ag.push_back(var(i));
    out.a = Ideal::make(ring, ag);
    out.y = var(n - 1);

    // expected: full Sally ideal with the given constants
    std::vector<Polynomial> eg;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) eg.push_back(var(i) * var(j));
    for (int k = 0; k < n - 1; ++k)
        eg.push_back(var(k, 2) - var(n - 1, 2).scaled(Scalar::from_int(f, units[k])));
    out.expected = Ideal::make(ring, std::move(eg));

    std::vector<Polynomial> mg;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j) mg.push_back(var(i) * var(j));
    mg.push_back(out.y);
    out.expected_middle = Ideal::make(ring, std::move(mg));

    // z = x_{n-1}^2 - c_{n-1} x_n^2 realizes the second link
    Polynomial z_target = var(n - 2, 2) - var(n - 1, 2).scaled(clast);
    OmegaResult om = compute_omega(out.a, out.b, out.y);
    BiliaisonOptions opts;
    opts.f = extract_f(out.b, out.y, om.omega, z_target);
    out.run = two_link_construct(out.a, out.b, out.y, opts);
    out.matches_expected = ideal_equals(out.run.ideal, out.expected);
    out.middle_matches = ideal_equals(out.run.middle, out.expected_middle);
    return out;
}

namespace {

PolyMatrix generic_matrix(const RingPtr& ring, int n) {
    PolyMatrix mx(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mx[i][j] = Polynomial::variable(ring, i * n + j);
    return mx;
}

PolyMatrix delete_row_col(const PolyMatrix& mx, int row, int col) {
    PolyMatrix out;
    for (int i = 0; i < static_cast<int>(mx.size()); ++i) {
        if (i == row) continue;
        std::vector<Polynomial> r;
        for (int j = 0; j < static_cast<int>(mx[i].size()); ++j)
            if (j != col) r.push_back(mx[i][j]);
        out.push_back(std::move(r));
    }
    return out;
}

// all k x k minors as an ideal generator list
std::vector<Polynomial> minors(const PolyMatrix& mx, int k) {
    const int n = static_cast<int>(mx.size());
    std::vector<Polynomial> out;
    std::vector<int> rows(k), cols(k);
    auto choose = [&](auto&& self, std::vector<int>& sel, int start, int count,
                      auto&& emit) -> void {
        if (count == 0) {
            emit();
            return;
        }
        for (int i = start; i + count <= n; ++i) {
            sel[sel.size() - count] = i;
            self(self, sel, i + 1, count - 1, emit);
        }
    };
    choose(choose, rows, 0, k, [&] {
        choose(choose, cols, 0, k, [&] {
            PolyMatrix sub(k, std::vector<Polynomial>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = mx[rows[i]][cols[j]];
            out.push_back(determinant(sub));
        });
    });
    return out;
}

} // namespace

GenericMinorsResult gen_generic_minors(const Field& field, int n, const BiliaisonOptions& opts) {
    if (n < 2) throw PrecondFailed("generic minors need n >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
    GenericMinorsResult out;
    out.ring = PolyRing::make(field, names);
    PolyMatrix mx = generic_matrix(out.ring, n);
    out.target = Ideal::make(out.ring, minors(mx, n - 1));
    if (n == 2) {
        out.linkage_ran = false;
        return out;
    }

    // a = I_{n-2}(N) for the upper-left (n-1) x (n-1) block
    PolyMatrix nx = delete_row_col(mx, n - 1, n - 1);
    out.a = Ideal::make(out.ring, minors(nx, n - 2));
    // b: minors sharing the last row or column (2n - 1 of them)
    std::vector<Polynomial> bg;
    for (int i = 0; i < n; ++i) bg.push_back(determinant(delete_row_col(mx, i, n - 1)));
    for (int j = 0; j < n - 1; ++j) bg.push_back(determinant(delete_row_col(mx, n - 1, j)));
    out.b = Ideal::make(out.ring, std::move(bg));

    out.y = determinant(delete_row_col(nx, 0, 0)); // N_{1,1}
    out.z = determinant(delete_row_col(mx, 0, 0)); // M_{1,1}

    OmegaResult om = compute_omega(out.a, out.b, out.y);
    BiliaisonOptions o = opts;
    o.f = extract_f(out.b, out.y, om.omega, out.z);
    out.run = two_link_construct(out.a, out.b, out.y, o);
    out.linkage_ran = true;
    out.matches_target = ideal_equals(out.run.ideal, out.target);

    // Sylvester cross-check: y * I + b = z * a + b
    std::vector<Polynomial> lhs = out.b.gens(), rhs = out.b.gens();
    for (const auto& gi : out.target.gens()) lhs.push_back(out.y * gi);
    for (const auto& ga : out.a.gens()) rhs.push_back(out.z * ga);
    out.sylvester_ok = ideal_equals(Ideal::make(out.ring, std::move(lhs)),
                                    Ideal::make(out.ring, std::move(rhs)));
    return out;
}

ExtrasymmetricResult gen_extrasymmetric(const Field& field, std::int64_t lambda,
                                        const BiliaisonOptions& opts) {
    Scalar lam = Scalar::from_int(field, lambda);
    if (lam.is_zero()) throw PrecondFailed("lambda must be a unit");
    ExtrasymmetricResult out;
    out.ring = PolyRing::make(field, {"a", "b", "c", "d", "e", "f", "x", "y", "z"});
    const RingPtr& R = out.ring;
    auto v = [&](int i) { return Polynomial::variable(R, i); };
    Polynomial A[3][3] = {{v(0), v(1), v(2)}, {v(1), v(3), v(4)}, {v(2), v(4), v(5)}};
    Polynomial B[3][3] = {{Polynomial::zero(R), v(6), v(7)},
                          {-v(6), Polynomial::zero(R), v(8)},
                          {-v(7), -v(8), Polynomial::zero(R)}};
    PolyMatrix N(6, std::vector<Polynomial>(6));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            N[i][j] = B[i][j];
            N[i][j + 3] = A[i][j];
            N[i + 3][j] = -A[i][j];
            N[i + 3][j + 3] = B[i][j].scaled(lam);
        }
    // a = the 4x4 Pfaffians of N
    std::vector<Polynomial> ag;
    for (int p = 0; p < 6; ++p)
        for (int q = p + 1; q < 6; ++q) {
            std::vector<int> rows;
            for (int t = 0; t < 6; ++t)
                if (t != p && t != q) rows.push_back(t);
            Polynomial pf = pfaffian(N, rows);
            if (!pf.is_zero()) ag.push_back(pf);
        }
    out.a = Ideal::make(R, ag);

    // b: the three quadrics b^2-ad+l x^2, bc-ae+l xy, c^2-af+l y^2
    Polynomial g1 = v(1) * v(1) - v(0) * v(3) + (v(6) * v(6)).scaled(lam);
    Polynomial g2 = v(1) * v(2) - v(0) * v(4) + (v(6) * v(7)).scaled(lam);
    Polynomial g3 = v(2) * v(2) - v(0) * v(5) + (v(7) * v(7)).scaled(lam);
    out.b = Ideal::make(R, {g1, g2, g3});

    out.y = v(2) * v(3) - v(1) * v(4) + (v(6) * v(8)).scaled(lam); // cd - be + l xz
    Polynomial z_target = v(0) * v(6) + out.y;                     // ax + y

    OmegaResult om = compute_omega(out.a, out.b, out.y);
    BiliaisonOptions o = opts;
    o.f = extract_f(out.b, out.y, om.omega, z_target);
    out.run = two_link_construct(out.a, out.b, out.y, o);

    // the printed 9-generator ideal
    auto lp = [&](const Polynomial& p) { return p.scaled(lam); };
    std::vector<Polynomial> ig;
    ig.push_back(v(4) * v(4) - v(3) * v(5) - v(2) * v(6) + v(1) * v(7) + v(0) * v(8) +
                 lp(v(8) * v(8)));                                       // e^2-df-cx+by+az+l z^2
    ig.push_back(v(2) * v(4) - v(1) * v(5) + v(0) * v(7) + lp(v(7) * v(8))); // ce-bf+ay+l yz
    ig.push_back(v(2) * v(3) - v(1) * v(4) + v(0) * v(6) + lp(v(6) * v(8))); // cd-be+ax+l xz
    ig.push_back(v(2) * v(2) - v(0) * v(5) + lp(v(7) * v(7)));               // c^2-af+l y^2
    ig.push_back(v(1) * v(2) - v(0) * v(4) + lp(v(6) * v(7)));               // bc-ae+l xy
    ig.push_back(v(0) * v(2) + lp(v(5) * v(6)) - lp(v(4) * v(7)) + lp(v(2) * v(8))); // ac+l fx-l ey+l cz
    ig.push_back(v(1) * v(1) - v(0) * v(3) + lp(v(6) * v(6)));               // b^2-ad+l x^2
    ig.push_back(v(0) * v(1) + lp(v(4) * v(6)) - lp(v(3) * v(7)) + lp(v(1) * v(8))); // ab+l ex-l dy+l bz
    ig.push_back(v(0) * v(0) + lp(v(2) * v(6)) - lp(v(1) * v(7)) + lp(v(0) * v(8))); // a^2+l cx-l by+l az
    out.expected = Ideal::make(R, std::move(ig));
    out.matches_expected = ideal_equals(out.run.ideal, out.expected);

    // output extrasymmetric matrix M' (upper triangle per the display)
    Scalar lam_inv = FieldOps::inv(field, lam);
    PolyMatrix mp(6, std::vector<Polynomial>(6, Polynomial::zero(R)));
    auto set = [&](int i, int j, const Polynomial& p) {
        mp[i][j] = p;
        mp[j][i] = -p;
    };
    set(0, 1, v(6));
    set(0, 2, v(7));
    set(0, 3, v(0));
    set(0, 4, v(1));
    set(0, 5, v(2));
    set(1, 2, v(0).scaled(lam_inv) + v(8));
    set(1, 3, v(1));
    set(1, 4, v(3));
    set(1, 5, v(4));
    set(2, 3, v(2));
    set(2, 4, v(4));
    set(2, 5, v(5));
    set(3, 4, lp(v(6)));
    set(3, 5, lp(v(7)));
    set(4, 5, v(0) + lp(v(8)));
    out.m_prime = mp;
    std::vector<Polynomial> pg;
    for (int p = 0; p < 6; ++p)
        for (int q = p + 1; q < 6; ++q) {
            std::vector<int> rows;
            for (int t = 0; t < 6; ++t)
                if (t != p && t != q) rows.push_back(t);
            Polynomial pf = pfaffian(mp, rows);
            if (!pf.is_zero()) pg.push_back(pf);
        }
    out.pfaffian_match = ideal_equals(Ideal::make(R, std::move(pg)), out.run.ideal);
    return out;
}

Ideal apolar_annihilator(const Polynomial& form, int maxdeg) {
    if (form.is_zero()) throw PrecondFailed("apolar annihilator of the zero form");
    auto sdeg = form.homogeneous_degree();
    if (!sdeg) throw PrecondFailed("apolar annihilator needs a homogeneous form");
    const int s = *sdeg;
    if (s > maxdeg) throw PrecondFailed("maxdeg below the degree of the form");
    const RingPtr& ring = form.ring();
    const Field& field = ring->field();
    const int n = ring->nvars();

    auto coeff_of = [&](const Monomial& m) -> Scalar {
        for (const auto& t : form.terms())
            if (t.mon == m) return t.coeff;
        return Scalar::from_int(field, 0);
    };

    std::vector<Polynomial> gens;
    for (int j = 1; j <= std::min(maxdeg, s + 1); ++j) {
        std::vector<Monomial> basis = ring->monomials_of_degree(j);
        if (j > s) {
            // everything annihilates; the truncation generators
            for (const auto& m : basis)
                gens.push_back(Polynomial::monomial_poly(ring, m, Scalar::from_int(field, 1)));
            continue;
        }
        std::vector<Monomial> target = ring->monomials_of_degree(s - j);
        // rows: target monomials; columns: candidate monomials
        std::vector<std::vector<Scalar>> mat(
            target.size(), std::vector<Scalar>(basis.size(), Scalar::from_int(field, 0)));
        for (std::size_t cidx = 0; cidx < basis.size(); ++cidx) {
            // contraction: basis[cidx] o form has target-coefficient
            // equal to the coefficient of basis[cidx]*targetmon in form
            for (std::size_t ridx = 0; ridx < target.size(); ++ridx)
                mat[ridx][cidx] = coeff_of(basis[cidx].mul(target[ridx]));
        }
        (void)n;
        for (const auto& ker : kernel_basis(field, std::move(mat), static_cast<int>(basis.size()))) {
            std::vector<Term> terms;
            for (std::size_t cidx = 0; cidx < basis.size(); ++cidx)
                if (!ker[cidx].is_zero()) terms.push_back({basis[cidx], ker[cidx]});
            gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
        }
    }
    Ideal full = Ideal::make(ring, std::move(gens));
    return Ideal::make(ring, full.minimal_generators());
}

Polynomial random_dense_form(const RingPtr& ring, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Field& field = ring->field();
    std::vector<Term> terms;
    for (const Monomial& m : ring->monomials_of_degree(degree)) {
        std::int64_t c;
        if (field.is_prime()) {
            c = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(field.p - 1));
        } else {
            c = 1 + static_cast<std::int64_t>(rng() % 1000);
        }
        terms.push_back({m, Scalar::from_int(field, c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace gorlink

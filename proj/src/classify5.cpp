#include "jjc/classify5.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jjc {

namespace {

// Flattened index of entry a_ij (1-based), row-major.
int at(int i, int j) { return (i - 1) * 4 + (j - 1); }

Vec row16(std::initializer_list<std::pair<int, Rational>> entries)
{
    Vec v = zero_vec(16);
    for (const auto& [idx, c] : entries) v[idx] += c;
    return v;
}

bool same_span(std::size_t n, const std::vector<Vec>& a, const std::vector<Vec>& b)
{
    return span_basis(n, a) == span_basis(n, b);
}

std::vector<Vec> flattened(const std::vector<LinearMap>& maps)
{
    std::vector<Vec> out;
    for (const auto& m : maps) out.push_back(flatten(m));
    return out;
}

// Rows (i, j) of  D^T M - M D  as linear functions of the coefficients on `basis`.
Mat self_adjoint_system(const BilinearForm& omega, const std::vector<LinearMap>& basis)
{
    const int n = omega.dim();
    Mat sys(static_cast<std::size_t>(n) * n, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Mat c = basis[k].transpose() * omega.matrix - omega.matrix * basis[k];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys(static_cast<std::size_t>(i) * n + j, k) = c(i, j);
    }
    return sys;
}

LinearMap combine(const std::vector<LinearMap>& basis, const Vec& coeffs)
{
    LinearMap out(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (sgn(coeffs[k]) != 0) out = out + coeffs[k] * basis[k];
    return out;
}

Mat direct_sum_one(const Mat& t)
{
    const std::size_t n = t.rows();
    Mat out(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = t(i, j);
    out(n, n) = 1;
    return out;
}

// Pushforward of a form along an invertible T: (x, y) -> f(T^-1 x, T^-1 y).
Mat pushforward(const Mat& f, const Mat& t)
{
    Mat ti = *inverse(t);
    return ti.transpose() * f * ti;
}

BilinearForm trivial_form4(const Vec& a)  // a = (a12, a13, a14, a23, a24, a34)
{
    return BilinearForm::skew(4, {{1, 2, a[0]}, {1, 3, a[1]}, {1, 4, a[2]}, {2, 3, a[3]}, {2, 4, a[4]}, {3, 4, a[5]}});
}

// Self-adjoint skew forms on K^4 for D, as a basis of forms.
std::vector<BilinearForm> self_adjoint_forms(const LinearMap& d)
{
    std::vector<BilinearForm> unit_forms;
    for (int k = 1; k <= 6; ++k) unit_forms.push_back(trivial_form4(unit(6, k)));
    Mat sys(16, 6);
    for (int k = 0; k < 6; ++k) {
        Mat c = d.transpose() * unit_forms[k].matrix - unit_forms[k].matrix * d;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sys(i * 4 + j, k) = c(i, j);
    }
    std::vector<BilinearForm> out;
    for (const Vec& v : kernel_basis(sys)) out.push_back(trivial_form4(v));
    return out;
}

// Coefficient vectors (a12 .. a34) of a list of forms.
std::vector<Vec> form_coords(const std::vector<BilinearForm>& forms)
{
    std::vector<Vec> out;
    for (const auto& f : forms)
        out.push_back({f.matrix(0, 1), f.matrix(0, 2), f.matrix(0, 3), f.matrix(1, 2), f.matrix(1, 3), f.matrix(2, 3)});
    return out;
}

std::vector<Vec> kernel_of_rows(std::size_t n, const std::vector<Vec>& rows)
{
    return kernel_basis(Mat::from_rows(n, rows));
}

LinearMap d_canonical(int which)
{
    LinearMap d(4, 4);
    if (which >= 1) d(0, 1) = 1;
    if (which >= 2) d(2, 3) = 1;
    return d;
}

}  // namespace

LinearMap H4AntiderivationFamily::matrix(const Rational& a21, const Rational& a31)
{
    LinearMap d(4, 4);
    d(1, 0) = a21;
    d(2, 0) = a31;
    d(3, 1) = -2 * a31;
    d(3, 2) = 2 * a21;
    return d;
}

LinearMap H4AntiderivationFamily::member(const Rational& a21, const Rational& a31, const Rational& a44) const
{
    const std::size_t k = self_adjoint_basis.size();
    Mat sys(3, k);
    for (std::size_t c = 0; c < k; ++c) {
        sys(0, c) = self_adjoint_basis[c](1, 0);
        sys(1, c) = self_adjoint_basis[c](2, 0);
        sys(2, c) = self_adjoint_basis[c](3, 3);
    }
    auto coeffs = solve_linear(sys, {a21, a31, a44});
    if (!coeffs) throw InternalError("self-adjoint anti-derivations are not parametrized by (a21, a31, a44)");
    return combine(self_adjoint_basis, *coeffs);
}

H4AntiderivationFamily h4_antiderivation_family()
{
    H4AntiderivationFamily fam;
    const Algebra h = h4();
    const BilinearForm w = h4_form();
    fam.ader_basis = ader_space(h);
    Report& r = fam.report;
    r.add("ader_dimension", true, std::to_string(fam.ader_basis.size()));

    std::vector<Vec> printed_ader = {
        row16({{at(1, 1), 1}, {at(4, 4), 1}, {at(3, 3), 1}}),
        row16({{at(2, 2), 1}, {at(4, 4), -2}, {at(3, 3), -2}}),
        row16({{at(4, 2), 1}, {at(3, 1), 2}}),
        row16({{at(1, 2), 1}}), row16({{at(1, 3), 1}}), row16({{at(1, 4), 1}}),
        row16({{at(2, 4), 1}}), row16({{at(3, 2), 1}}), row16({{at(3, 4), 1}}),
    };
    std::vector<Vec> printed_space = kernel_of_rows(16, printed_ader);
    r.add("ader_matches_printed", same_span(16, printed_space, flattened(fam.ader_basis)),
          "the printed anti-derivation constraints cut out a different space");

    Mat sys = self_adjoint_system(w, fam.ader_basis);
    std::vector<Vec> combos;
    for (const Vec& c : kernel_basis(sys)) combos.push_back(flatten(combine(fam.ader_basis, c)));
    for (const Vec& v : span_basis(16, combos)) fam.self_adjoint_basis.push_back(unflatten(4, v));
    r.add("self_adjoint_dimension", fam.self_adjoint_basis.size() == 3,
          "dimension " + std::to_string(fam.self_adjoint_basis.size()));

    std::vector<Vec> printed_sa = printed_ader;
    printed_sa.push_back(row16({{at(2, 1), 2}, {at(4, 3), -1}}));
    printed_sa.push_back(row16({{at(4, 4), 2}, {at(3, 3), 1}}));
    printed_sa.push_back(row16({{at(4, 1), 1}}));
    printed_sa.push_back(row16({{at(2, 3), 1}}));
    r.add("self_adjoint_matches_printed",
          same_span(16, kernel_of_rows(16, printed_sa), flattened(fam.self_adjoint_basis)),
          "the printed self-adjointness constraints cut out a different space");

    bool relations = true;
    for (const auto& b : fam.self_adjoint_basis)
        relations = relations && b(0, 0) == b(3, 3) && b(1, 1) == -2 * b(3, 3) && b(2, 2) == -2 * b(3, 3);
    r.add("diagonal_relations", relations, "a11 = a44, a22 = a33 = -2 a44 fails");
    if (!r.passed()) return fam;

    // D(p)^2 as a quadratic form in p = (a21, a31, a44), by polarization.
    auto q = [&](const Vec& p) {
        LinearMap d = fam.member(p[0], p[1], p[2]);
        return d * d;
    };
    Mat quad[3][3];
    for (int i = 0; i < 3; ++i) quad[i][i] = q(unit(3, i + 1));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) quad[i][j] = q(add(unit(3, i + 1), unit(3, j + 1))) - quad[i][i] - quad[j][j];
    bool forced = false;
    for (int e = 0; e < 16 && !forced; ++e) {
        const int rr = e / 4, cc = e % 4;
        bool only_a44 = sgn(quad[2][2](rr, cc)) != 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                if (!(i == 2 && j == 2)) only_a44 = only_a44 && sgn(quad[i][j](rr, cc)) == 0;
        forced = only_a44;
    }
    r.add("square_forces_a44_zero", forced, "no entry of D^2 isolates a44^2");
    bool family_nilpotent = quad[0][0].is_zero() && quad[1][1].is_zero() && quad[0][1].is_zero();
    r.add("family_square_zero", family_nilpotent, "D^2 != 0 on the a44 = 0 family");
    r.add("family_matches_display",
          fam.member(1, 0, 0) == H4AntiderivationFamily::matrix(1, 0) &&
              fam.member(0, 1, 0) == H4AntiderivationFamily::matrix(0, 1),
          "the a44 = 0 family differs from the displayed matrix");
    return fam;
}

Normalization normalize_case(const Rational& a21, const Rational& a31)
{
    const LinearMap d = H4AntiderivationFamily::matrix(a21, a31);
    Mat t = Mat::identity(4);
    LinearMap dcan;
    Rational scale = 1;
    Rational printed_t = 1;
    std::string name;
    std::function<CosymplecticStructure()> target;
    if (sgn(a31) != 0) {
        name = "J5,1";
        t(1, 2) = -a21 / a31;
        t(2, 2) = 1 / a31;
        t(3, 3) = 1 / a31;
        dcan = H4AntiderivationFamily::matrix(0, 1);
        scale = 1 / a31;
        printed_t = a31;
        target = j51_structure;
    } else if (sgn(a21) != 0) {
        name = "J5,2";
        t(0, 0) = 1 / a21;
        t(1, 1) = 1 / (a21 * a21);
        t(3, 3) = 1 / a21;
        dcan = H4AntiderivationFamily::matrix(1, 0);
        scale = 1 / (a21 * a21);
        printed_t = a21;
        target = j52_structure;
    } else {
        name = "J5,3";
        dcan = LinearMap(4, 4);
        target = j53_structure;
    }

    const Algebra h = h4();
    const BilinearForm w0 = h4_form();
    CosymplecticStructure source = cosymplectic_from_symplectic(h, h4_form(scale), d);
    CosymplecticStructure tgt = target();
    Mat witness = direct_sum_one(t);

    Report r;
    r.add("automorphism", is_algebra_isomorphism({h, h, t}), "T is not an automorphism of H4");
    r.add("conjugates_d", t * d * *inverse(t) == dcan, "T D T^-1 is not the canonical form");
    r.add("form_pushforward", pushforward(h4_form(scale).matrix, t) == w0.matrix, "T_* omega_h != e14 + 2e23");
    r.merge(cosymplectic_isomorphism_report(source, tgt, witness), "iso");

    Report printed;
    if (name != "J5,3") {
        printed.add("printed_scale_pushforward", pushforward(h4_form(printed_t).matrix, t) == w0.matrix,
                    "T^-T (t omega0) T^-1 != omega0 with t as printed");
        printed.add("printed_scale_pullback", t.transpose() * h4_form(printed_t).matrix * t == w0.matrix,
                    "T^T (t omega0) T != omega0 with t as printed");
    }
    if (!r.passed()) throw InternalError("normalization of (" + to_string(a21) + ", " + to_string(a31) + "): " + r.summary());
    return Normalization{name, scale, t, witness, std::move(source), std::move(tgt), r, printed};
}

bool TrivialBaseCensus::passed() const
{
    for (const auto& b : branches)
        if (!b.report.passed()) return false;
    return branches.size() == 3;
}

TrivialBaseCensus trivial_base_census()
{
    TrivialBaseCensus census;
    const Algebra k4 = Algebra::trivial(4);
    const BilinearForm w0 = BilinearForm::skew(4, {{1, 4, 1}, {2, 3, 1}});
    const std::vector<Rational> grid = {-2, -1, 0, 1, 2};

    {  // D0: every form is self-adjoint, the product stays zero
        TrivialBaseBranch b{"D0", d_canonical(0), self_adjoint_forms(d_canonical(0)), "trivial", {}};
        b.report.add("all_forms", b.solution_basis.size() == 6, "not every form is self-adjoint for D0");
        CosymplecticStructure s = cosymplectic_from_symplectic(k4, w0, b.d);
        b.report.add("trivial_product", is_trivial(s.algebra()), "D0 gave a non-trivial product");
        census.branches.push_back(std::move(b));
    }
    {  // D1: a12 = a13 = a14 = 0, so e1 is in the radical of every solution
        TrivialBaseBranch b{"D1", d_canonical(1), self_adjoint_forms(d_canonical(1)), "degenerate", {}};
        std::vector<Vec> printed = kernel_of_rows(6, {unit(6, 1), unit(6, 2), unit(6, 3)});
        b.report.add("relations_match_printed", same_span(6, printed, form_coords(b.solution_basis)),
                     "self-adjointness for D1 is not a12 = a13 = a14 = 0");
        std::vector<Vec> rows;
        for (const auto& f : b.solution_basis)
            for (std::size_t i = 0; i < 4; ++i) rows.push_back(f.matrix.row(i));
        std::vector<Vec> radical = kernel_basis(Mat::from_rows(4, rows));
        b.report.add("common_radical", !radical.empty(), "solutions have no common radical vector");
        census.branches.push_back(std::move(b));
    }
    {  // D2: a12 = a13 = a34 = 0, a14 = a23
        TrivialBaseBranch b{"D2", d_canonical(2), self_adjoint_forms(d_canonical(2)), "J5,0", {}};
        std::vector<Vec> printed = kernel_of_rows(6, {unit(6, 1), unit(6, 2), unit(6, 6), sub(unit(6, 3), unit(6, 4))});
        b.report.add("relations_match_printed", same_span(6, printed, form_coords(b.solution_basis)),
                     "self-adjointness for D2 is not a12 = a13 = a34 = 0, a14 = a23");
        CosymplecticStructure j50s = j50_structure();
        bool nondeg_iff = true, normalized = true, t_commutes = true, t_push = true, t_pull = true;
        std::string failure;
        for (const Rational& a23 : grid)
            for (const Rational& a24 : grid) {
                BilinearForm w = trivial_form4({0, 0, a23, a23, a24, 0});
                bool nondeg = sgn(determinant(w.matrix)) != 0;
                nondeg_iff = nondeg_iff && nondeg == (sgn(a23) != 0);
                if (!nondeg) continue;
                Mat phi(4, 4);
                phi(0, 0) = a23;
                phi(1, 1) = a23;
                phi(2, 2) = 1;
                phi(2, 3) = a24 / a23;
                phi(3, 3) = 1;
                CosymplecticStructure src = cosymplectic_from_symplectic(k4, w, b.d);
                Report iso = cosymplectic_isomorphism_report(src, j50s, direct_sum_one(phi));
                bool ok = phi * b.d == b.d * phi && phi.transpose() * w0.matrix * phi == w.matrix && iso.passed();
                if (!ok && failure.empty()) failure = "(a23, a24) = (" + to_string(a23) + ", " + to_string(a24) + ")";
                normalized = normalized && ok;

                Mat tp(4, 4);
                tp(0, 0) = -1 / a23;
                tp(1, 1) = -1 / a23;
                tp(2, 2) = 1;
                tp(2, 3) = -a24 / a23;
                tp(3, 3) = 1;
                t_commutes = t_commutes && tp * b.d * *inverse(tp) == b.d;
                t_push = t_push && pushforward(w.matrix, tp) == w0.matrix;
                t_pull = t_pull && tp.transpose() * w.matrix * tp == w0.matrix;
            }
        b.report.add("nondegenerate_iff_a23", nondeg_iff, "non-degeneracy is not equivalent to a23 != 0");
        b.report.add("normalized_to_j50", normalized, "normalization failed at " + failure);
        census.printed_claims.add("printed_t_commutes", t_commutes, "T D2 T^-1 != D2");
        census.printed_claims.add("printed_t_pushforward", t_push, "T_* omega != e14 + e23");
        census.printed_claims.add("printed_t_pullback", t_pull, "T^T omega T != e14 + e23");
        census.branches.push_back(std::move(b));
    }
    return census;
}

Distinction pairwise_distinction()
{
    Distinction d;
    d.fingerprints = {{"J5,1", fingerprint(j51())}, {"J5,2", fingerprint(j52())}, {"J5,3", fingerprint(j53())}};
    d.pairwise_distinct = true;
    for (std::size_t i = 0; i < d.fingerprints.size(); ++i)
        for (std::size_t j = i + 1; j < d.fingerprints.size(); ++j)
            if (d.fingerprints[i].second == d.fingerprints[j].second) d.pairwise_distinct = false;
    return d;
}

Mat printed_phi()
{
    Mat p(5, 5);
    p(1, 0) = 2;
    p(4, 0) = Rational(-1, 2);
    p(0, 1) = 2;
    p(3, 2) = 1;
    p(2, 3) = Rational(1, 2);
    p(4, 4) = 1;
    return p;
}

Mat corrected_phi()
{
    Mat p = printed_phi();
    p(4, 0) = Rational(1, 2);
    return p;
}

std::optional<Mat> graded_isomorphism_search(const Algebra& source, const Algebra& target,
                                             const std::vector<Rational>& entries)
{
    const int n = source.dim();
    if (target.dim() != n) return std::nullopt;
    auto check_two_step = [](const Algebra& a) {
        for (const Vec& z : derived_subalgebra(a))
            for (int j = 1; j <= a.dim(); ++j)
                if (!is_zero(multiply(a, z, unit(a.dim(), j))) || !is_zero(multiply(a, unit(a.dim(), j), z)))
                    throw std::invalid_argument("graded search: derived algebra is not in the annihilator");
    };
    check_two_step(source);
    check_two_step(target);

    auto complement = [n](const Algebra& a) {
        Echelon e = rref(Mat::from_rows(n, derived_subalgebra(a)));
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (std::find(e.pivots.begin(), e.pivots.end(), static_cast<std::size_t>(i)) == e.pivots.end())
                idx.push_back(i);
        return idx;
    };
    const std::vector<int> sc = complement(source);
    const std::vector<int> tc = complement(target);
    if (sc.size() != tc.size()) return std::nullopt;
    const int r = static_cast<int>(sc.size());

    // products of generators and their linear relations
    std::vector<std::pair<int, int>> pairs;
    std::vector<Vec> prods;
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            pairs.push_back({i, j});
            prods.push_back(source.product(sc[i] + 1, sc[j] + 1));
        }
    const Mat v = Mat::from_columns(n, prods);
    const std::vector<Vec> relations = kernel_basis(v);
    const std::vector<std::size_t> basis_pairs = rref(v).pivots;

    // integer scaling
    auto lcm_den = [](std::int64_t acc, const Rational& q) {
        return std::lcm(acc, static_cast<std::int64_t>(q.get_den().get_si()));
    };
    std::int64_t ent_scale = 1;
    for (const auto& q : entries) ent_scale = lcm_den(ent_scale, q);
    std::vector<std::int64_t> ents;
    for (const auto& q : entries) {
        Rational s = q * Rational(ent_scale);
        ents.push_back(s.get_num().get_si());
    }
    std::int64_t tscale = 1;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int k = 1; k <= n; ++k) tscale = lcm_den(tscale, target.coeff(tc[a] + 1, tc[b] + 1, k));
    std::vector<std::int64_t> tconst(static_cast<std::size_t>(r) * r * n);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int k = 0; k < n; ++k) {
                Rational s = target.coeff(tc[a] + 1, tc[b] + 1, k + 1) * Rational(tscale);
                tconst[(static_cast<std::size_t>(a) * r + b) * n + k] = s.get_num().get_si();
            }
    struct IntRelation {
        std::vector<std::pair<std::size_t, std::int64_t>> terms;  // pair index, coefficient
        int last = 0;                                              // highest generator involved
    };
    std::vector<IntRelation> rels;
    for (const Vec& rel : relations) {
        std::int64_t den = 1;
        for (const auto& q : rel) den = lcm_den(den, q);
        IntRelation ir;
        for (std::size_t p = 0; p < rel.size(); ++p)
            if (sgn(rel[p]) != 0) {
                Rational s = rel[p] * Rational(den);
                ir.terms.push_back({p, s.get_num().get_si()});
                ir.last = std::max(ir.last, pairs[p].second);
            }
        rels.push_back(std::move(ir));
    }

    std::vector<std::vector<std::int64_t>> cols(r, std::vector<std::int64_t>(r));
    auto product = [&](int i, int j, std::vector<std::int64_t>& out) {
        std::fill(out.begin(), out.end(), 0);
        for (int a = 0; a < r; ++a) {
            if (cols[i][a] == 0) continue;
            for (int b = 0; b < r; ++b) {
                if (cols[j][b] == 0) continue;
                const std::int64_t s = cols[i][a] * cols[j][b];
                for (int k = 0; k < n; ++k) out[k] += s * tconst[(static_cast<std::size_t>(a) * r + b) * n + k];
            }
        }
    };
    std::vector<std::int64_t> acc(n), tmp(n);
    auto relations_hold = [&](int upto) {
        for (const auto& rel : rels) {
            if (rel.last != upto) continue;
            std::fill(acc.begin(), acc.end(), 0);
            for (const auto& [p, c] : rel.terms) {
                product(pairs[p].first, pairs[p].second, tmp);
                for (int k = 0; k < n; ++k) acc[k] += c * tmp[k];
            }
            for (int k = 0; k < n; ++k)
                if (acc[k] != 0) return false;
        }
        return true;
    };

    auto to_vec = [&](int i) {
        Vec y = zero_vec(n);
        for (int a = 0; a < r; ++a) y[tc[a]] = Rational(cols[i][a]) / Rational(ent_scale);
        return y;
    };
    auto assemble = [&]() -> std::optional<Mat> {
        std::vector<Vec> src_basis, images;
        for (int i = 0; i < r; ++i) {
            src_basis.push_back(unit(n, sc[i] + 1));
            images.push_back(to_vec(i));
        }
        for (std::size_t p : basis_pairs) {
            src_basis.push_back(prods[p]);
            images.push_back(multiply(target, to_vec(pairs[p].first), to_vec(pairs[p].second)));
        }
        if (static_cast<int>(src_basis.size()) != n) return std::nullopt;
        Mat b = Mat::from_columns(n, src_basis);
        Mat im = Mat::from_columns(n, images);
        if (sgn(determinant(im)) == 0) return std::nullopt;
        Mat phi = im * *inverse(b);
        if (!is_algebra_isomorphism({source, target, phi})) return std::nullopt;
        return phi;
    };

    std::optional<Mat> found;
    std::function<void(int)> place = [&](int i) {
        if (found) return;
        if (i == r) {
            found = assemble();
            return;
        }
        std::vector<int> digit(r, 0);
        std::size_t total = 1;
        for (int a = 0; a < r; ++a) total *= ents.size();
        for (std::size_t code = 0; code < total && !found; ++code) {
            std::size_t rest = code;
            bool nonzero = false;
            for (int a = 0; a < r; ++a) {
                cols[i][a] = ents[rest % ents.size()];
                rest /= ents.size();
                nonzero = nonzero || cols[i][a] != 0;
            }
            if (!nonzero) continue;
            if (!relations_hold(i)) continue;
            place(i + 1);
        }
    };
    place(0);
    return found;
}

Investigation investigate_J50_J52()
{
    Investigation inv;
    const CosymplecticStructure s0 = j50_structure();
    const CosymplecticStructure s2 = j52_structure();
    const Mat p = printed_phi();

    inv.printed_forward = cosymplectic_isomorphism_report(s0, s2, p);
    inv.printed_backward = cosymplectic_isomorphism_report(s2, s0, p);
    inv.alpha_of_printed_e1 = s2.alpha()(p.col(0));

    const Mat c = corrected_phi();
    inv.corrected.add("algebra_morphism", is_algebra_morphism({s2.algebra(), s0.algebra(), c}),
                      "corrected map is not a morphism J5,2 -> J5,0");
    inv.corrected.add("invertible", sgn(determinant(c)) != 0, "corrected map is singular");
    Report strict = cosymplectic_isomorphism_report(s2, s0, c);
    inv.corrected.add("not_strict", !strict.passed(), "corrected map is unexpectedly a cosymplectic isomorphism");

    const std::vector<Rational> entries = {0, Rational(1, 2), Rational(-1, 2), 1, -1, 2, -2};
    inv.search_witness = graded_isomorphism_search(s2.algebra(), s0.algebra(), entries);
    inv.search.add("found", inv.search_witness.has_value(), "no graded isomorphism with entries in {0, +-1/2, +-1, +-2}");
    if (inv.search_witness)
        inv.search.add("verified", is_algebra_isomorphism({s2.algebra(), s0.algebra(), *inv.search_witness}),
                       "search witness failed exact verification");

    const Algebra k0 = restrict_to_subalgebra(s0.algebra(), kernel_matrix(s0.alpha()));
    const Algebra k2 = restrict_to_subalgebra(s2.algebra(), kernel_matrix(s2.alpha()));
    inv.kernel_j50_abelian = is_trivial(k0);
    inv.kernel_j52_abelian = is_trivial(k2);
    inv.kernel_fingerprints_differ = !(fingerprint(k0) == fingerprint(k2));
    inv.strict_isomorphism_possible = !inv.kernel_fingerprints_differ;

    {  // row-image reading of D2: D(e1) = e2, D(e3) = e4
        LinearMap d2 = d_canonical(2);
        LinearMap d2t = d2.transpose();
        Mat sigma(4, 4);  // e1 <-> e2, e3 <-> e4
        sigma(1, 0) = sigma(0, 1) = sigma(3, 2) = sigma(2, 3) = 1;
        const BilinearForm w0 = BilinearForm::skew(4, {{1, 4, 1}, {2, 3, 1}});
        BilinearForm moved{pushforward(w0.matrix, sigma), Symmetry::skew};
        Report& t = inv.transposed_reading;
        t.add("conjugate", sigma * d2 * *inverse(sigma) == d2t, "sigma does not conjugate D2 to its transpose");
        t.add("form_self_adjoint", self_adjoint_wrt(moved, d2t), "moved form is not self-adjoint for D2^T");
        t.add("solution_dimension", self_adjoint_forms(d2t).size() == self_adjoint_forms(d2).size(),
              "solution spaces differ in dimension");
        if (t.passed()) {
            CosymplecticStructure alt = cosymplectic_from_symplectic(Algebra::trivial(4), moved, d2t);
            t.merge(cosymplectic_isomorphism_report(s0, alt, direct_sum_one(sigma)), "iso");
        }
    }

    inv.example_form_degenerate =
        sgn(determinant(BilinearForm::skew(4, {{1, 2, 1}, {2, 3, 2}}).matrix)) == 0;

    Report& s = inv.summary;
    s.add("printed_phi_fails_forward", !inv.printed_forward.passed(), "printed map passed as J5,0 -> J5,2");
    s.add("printed_phi_fails_backward", !inv.printed_backward.passed(), "printed map passed as J5,2 -> J5,0");
    s.add("printed_phi_alpha_e1", inv.alpha_of_printed_e1 == Rational(-1, 2),
          "alpha(Phi(e1)) = " + to_string(inv.alpha_of_printed_e1));
    s.add("corrected_phi_algebra_isomorphism", inv.corrected.passed(), inv.corrected.summary());
    s.add("search_finds_isomorphism", inv.search.passed(), inv.search.summary());
    s.add("kernel_obstruction",
          inv.kernel_j50_abelian && !inv.kernel_j52_abelian && inv.kernel_fingerprints_differ,
          "ker alpha0 and ker alpha are not distinguished");
    s.add("transposed_reading_consistent", inv.transposed_reading.passed(), inv.transposed_reading.summary());
    s.add("example_form_degenerate", inv.example_form_degenerate, "e12 + 2e23 is non-degenerate on H4");
    return inv;
}

Census full_census(const std::vector<Rational>& values)
{
    Census c;
    std::vector<Rational> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    bool all_verified = true, names_consistent = true;
    std::set<std::string> seen;
    for (const Rational& a21 : sorted)
        for (const Rational& a31 : sorted) {
            Normalization nz = normalize_case(a21, a31);
            std::string expected = sgn(a31) != 0 ? "J5,1" : (sgn(a21) != 0 ? "J5,2" : "J5,3");
            c.grid.push_back({a21, a31, nz.name, nz.report.passed()});
            all_verified = all_verified && nz.report.passed();
            names_consistent = names_consistent && nz.name == expected;
            seen.insert(nz.name);
        }
    c.report.add("grid_verified", all_verified, "a grid point failed normalization");
    c.report.add("grid_names", names_consistent, "a grid point normalized to an unexpected entry");
    c.report.add("grid_reaches_all_h4_entries", seen == std::set<std::string>{"J5,1", "J5,2", "J5,3"},
                 "grid does not reach exactly J5,1, J5,2, J5,3");

    c.trivial_base = trivial_base_census();
    std::set<std::string> outcomes;
    for (const auto& b : c.trivial_base.branches)
        if (b.outcome != "degenerate") outcomes.insert(b.outcome);
    c.report.add("trivial_base", c.trivial_base.passed(), "trivial-base branch failed");
    c.report.add("trivial_base_entries", outcomes == std::set<std::string>{"J5,0", "trivial"},
                 "trivial base does not yield exactly J5,0 and trivial");

    c.catalog.push_back({"J5,0", j50_structure(), fingerprint(j50())});
    c.catalog.push_back({"J5,1", j51_structure(), fingerprint(j51())});
    c.catalog.push_back({"J5,2", j52_structure(), fingerprint(j52())});
    c.catalog.push_back({"J5,3", j53_structure(), fingerprint(j53())});
    c.catalog.push_back({"trivial", trivial_structure(5), fingerprint(Algebra::trivial(5))});
    bool reeb_ok = true;
    for (const auto& e : c.catalog) reeb_ok = reeb_ok && e.structure.reeb() == unit(5, 5);
    c.report.add("catalog_reeb_e5", reeb_ok, "a catalog entry has Reeb vector other than e5");
    c.report.add("h4_based_entries", seen.size() == 3, std::to_string(seen.size()));
    c.report.add("distinct", pairwise_distinction().pairwise_distinct, "J5,1 / J5,2 / J5,3 fingerprints collide");
    return c;
}

}  // namespace jjc

#include "nregular/kernel_pairing.hpp"

namespace nregular {

namespace {

mpz_class factorial_z(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

mpz_class double_factorial(int n) { // n odd or <= 0; (-1)!! = 1
    mpz_class f = 1;
    for (int k = n; k >= 2; k -= 2) f *= k;
    return f;
}

// g(Z) . (Z x ... x Z) . f(Z) integrated over the unit sphere.
GaussianRational contract_integral(const TensorFn& colf, const TensorFn& rowg) {
    if (colf.rank != rowg.rank || colf.side != Side::Column || rowg.side != Side::Row)
        throw RankMismatchError("pairing needs a column/row pair of equal rank");
    TensorFn t = colf;
    Mat2L z = Mat2L::z_matrix();
    for (int k = 1; k <= t.rank; ++k) t = slot_apply(z, k, t);
    LaurentFn scalar;
    for (size_t i = 0; i < t.components.size(); ++i)
        scalar += rowg.components[i] * t.components[i];
    return integrate_S3(scalar);
}

} // namespace

mpq_class sphere_moment(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0) throw IndexRangeError("negative moment exponent");
    if (a % 2 || b % 2 || c % 2 || d % 2) return 0;
    int s = (a + b + c + d) / 2;
    mpz_class num = double_factorial(a - 1) * double_factorial(b - 1) *
                    double_factorial(c - 1) * double_factorial(d - 1);
    mpz_class den = factorial_z(s + 1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class sphere_moment_z(int a, int b, int c, int d) {
    if (a != d || b != c) return 0;
    mpq_class q(factorial_z(a) * factorial_z(b), factorial_z(a + b + 1));
    q.canonicalize();
    return (b % 2) ? mpq_class(-q) : q;
}

GaussianRational integrate_S3(const LaurentFn& f) {
    GaussianRational out;
    for (const auto& [e, c] : f.numerator()) {
        mpq_class m = sphere_moment_z(e[0], e[1], e[2], e[3]);
        if (m != 0) out += GaussianRational(m) * c;
    }
    return out;
}

GaussianRational integrate_S3_via_x(const LaurentFn& f) {
    GaussianRational out;
    for (const auto& [e, c] : f.to_real_sphere_poly().terms) {
        mpq_class m = sphere_moment(e[0], e[1], e[2], e[3]);
        if (m != 0) out += GaussianRational(m) * c;
    }
    return out;
}

KernelFn kernel(int n) {
    if (n < 1 || n > kMaxRank) throw RankMismatchError("kernel rank out of range");
    KernelFn k;
    k.n = n;
    size_t dim = 1u << n;
    k.comps.assign(dim, std::vector<LaurentFn>(dim));
    GaussianRational sign(n % 2 ? -1 : 1);
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = 0; j < dim; ++j) {
            LaurentFn f = LaurentFn::norm_inverse(1);
            for (int m = 0; m < n; ++m)
                f = f.partial(((j >> m) & 1u) ? 2 : 1, ((i >> m) & 1u) ? 2 : 1);
            k.comps[i][j] = sign * f;
        }
    return k;
}

std::vector<ExpansionTerm> truncated_expansion(int n, HalfInt l_max, ExpansionForm form) {
    std::vector<ExpansionTerm> out;
    Family lf = form == ExpansionForm::FGp ? Family::F : Family::Fp;
    Family rf = form == ExpansionForm::FGp ? Family::Gp : Family::G;
    for (HalfInt l : l_values(l_max))
        for (const auto& idx : enumerate_indices(lf, n, l)) {
            BasisIndex right = idx;
            right.family = rf;
            out.push_back(ExpansionTerm{idx, right});
        }
    return out;
}

GaussianRational bilinear_pairing(const TensorFn& f, const TensorFn& g) {
    return contract_integral(Dn_inverse(f, f.rank), g);
}

bool deg_switch_check(const TensorFn& f, const TensorFn& g) {
    GaussianRational lhs = bilinear_pairing(f, g);
    GaussianRational rhs = contract_integral(f, Dn_inverse(g, g.rank));
    if (f.rank % 2 == 0) rhs = -rhs;
    return lhs == rhs;
}

GaussianRational cauchy_theorem_integral(const TensorFn& f, const TensorFn& g) {
    return contract_integral(f, g);
}

SpinorTensor cauchy_fueter_apply(const TensorFn& f, const Biquaternion& w, HalfInt l_max) {
    const int n = f.rank;
    if (f.side != Side::Column) throw RankMismatchError("reproducing integral needs S-valued f");
    int max_deg = 0;
    for (const auto& [d, piece] : homogeneous_split(f)) {
        if (d < 0) throw NotPolynomialError("reproducing integral needs polynomial f");
        max_deg = std::max(max_deg, d);
    }
    if (max_deg > l_max.twice) throw TruncationInsufficientError();

    GaussianRational rho = norm(w);
    if (!rho.is_real()) throw IndexRangeError("evaluation point must have real norm");
    bool interior = rho.re < 1;

    SpinorTensor out(Side::Column, n);
    auto form = interior ? ExpansionForm::FGp : ExpansionForm::FpG;
    GaussianRational parity(n % 2 ? -1 : 1);
    for (const auto& term : truncated_expansion(n, l_max, form)) {
        GaussianRational s = contract_integral(f, basis_fn(term.right));
        if (s.is_zero()) continue;
        if (!interior) s *= parity;
        out = out + s * basis_fn(term.left).evaluate(w);
    }
    return out;
}

LaurentCoefficientTable laurent_coefficients(const TensorFn& f, HalfInt l_max) {
    const int n = f.rank;
    LaurentCoefficientTable table;
    auto pieces = homogeneous_split(f);
    GaussianRational bsign(n % 2 ? 1 : -1); // (-1)^{n-1}
    for (HalfInt l : l_values(l_max)) {
        bool want_a = pieces.count(l.twice) > 0;
        bool want_b = pieces.count(-(l.twice + n + 2)) > 0;
        if (!want_a && !want_b) continue;
        for (const auto& idx : enumerate_indices(Family::Gp, n, l)) {
            std::array<int, 3> key{l.twice, idx.mu.twice, idx.nu.twice};
            if (want_a) {
                GaussianRational a = bilinear_pairing(f, Gp_basis(n, l, idx.mu, idx.nu));
                if (!a.is_zero()) table.a[key] = a;
            }
            if (want_b) {
                GaussianRational b = bsign * bilinear_pairing(f, G_basis(n, l, idx.mu, idx.nu));
                if (!b.is_zero()) table.b[key] = b;
            }
        }
    }
    return table;
}

TensorFn reconstruct_from_coefficients(const LaurentCoefficientTable& table, int n) {
    TensorFn out(Side::Column, n);
    for (const auto& [key, c] : table.a)
        out += c * F_basis(n, HalfInt(key[0]), HalfInt(key[1]), HalfInt(key[2]));
    for (const auto& [key, c] : table.b)
        out += c * Fp_basis(n, HalfInt(key[0]), HalfInt(key[1]), HalfInt(key[2]));
    return out;
}

GaussianRational inner_product_F(const TensorFn& f1, const TensorFn& f2) {
    if (f1.rank != f2.rank || f1.side != Side::Column || f2.side != Side::Column)
        throw RankMismatchError();
    TensorFn h = Dn_inverse(f1, f1.rank);
    LaurentFn scalar;
    for (size_t i = 0; i < h.components.size(); ++i)
        scalar += f2.components[i].sphere_conjugate() * h.components[i];
    return integrate_S3(scalar);
}

GaussianRational inner_product_G(const TensorFn& g1, const TensorFn& g2) {
    if (g1.rank != g2.rank || g1.side != Side::Row || g2.side != Side::Row)
        throw RankMismatchError();
    TensorFn h = Dn_inverse(g1, g1.rank);
    LaurentFn scalar;
    for (size_t i = 0; i < h.components.size(); ++i)
        scalar += h.components[i] * g2.components[i].sphere_conjugate();
    return integrate_S3(scalar);
}

} // namespace nregular

#pragma once

#include "nregular/diff_ops.hpp"
#include "nregular/reps_basis.hpp"

namespace nregular {

/// Exact (1/2pi^2) * integral over the unit 3-sphere of the monomial
/// (x0)^a (x1)^b (x2)^c (x3)^d dS. Zero unless all exponents are even.
mpq_class sphere_moment(int a, int b, int c, int d);

/// Same normalization for an entry monomial z11^a z12^b z21^c z22^d
/// restricted to the real sphere: nonzero only when a = d and b = c,
/// with value (-1)^b a! b! / (a+b+1)!.
mpq_class sphere_moment_z(int a, int b, int c, int d);

/// (1/2pi^2) * integral of f over the unit sphere (N = 1 there, so
/// denominator powers drop). Fast path through sphere_moment_z.
GaussianRational integrate_S3(const LaurentFn& f);

/// Independent slow route: restrict to real coordinates, then apply
/// sphere_moment term by term. Used to cross-check integrate_S3.
GaussianRational integrate_S3_via_x(const LaurentFn& f);

/// Cauchy-Fueter kernel for rank n, in the single difference variable:
/// component (I, J) = (-1)^n d_{j1 i1} ... d_{jn in} N^{-1}.
struct KernelFn {
    int n = 1;
    /// comps[I][J], I the column (S) multi-index, J the row (S') one.
    std::vector<std::vector<LaurentFn>> comps;
};

KernelFn kernel(int n);

/// One term of the kernel expansion: left factor in one variable, right
/// factor in the other, sharing a basis label.
struct ExpansionTerm {
    BasisIndex left;   // F (FG' form) or F' (F'G form)
    BasisIndex right;  // G' resp. G
};

enum class ExpansionForm { FGp, FpG };

std::vector<ExpansionTerm> truncated_expansion(int n, HalfInt l_max, ExpansionForm form);

/// Invariant bilinear pairing <f, g> in the symmetric all-Z sphere form:
/// (1/2pi^2) int g(Z) . (Z x ... x Z) . (D_n^{-1} f)(Z) dS at R = 1.
GaussianRational bilinear_pairing(const TensorFn& f, const TensorFn& g);

/// Checks the D_n-transfer identity: the pairing equals
/// (-1)^{n-1} (1/2pi^2) int (D_n^{-1} g) . (Z x ... x Z) . f dS.
bool deg_switch_check(const TensorFn& f, const TensorFn& g);

/// Sphere integral int g . (Z x...x Z) . f dS (no D_n^{-1}); vanishes for
/// regular polynomial pairs. The slot k carrying Dz is immaterial in the
/// all-Z form; k is accepted for interface symmetry and ignored.
GaussianRational cauchy_theorem_integral(const TensorFn& f, const TensorFn& g);

/// Reproducing integral (1/2pi^2) int k(Z-W).(Z x..x Z).f(Z) dS evaluated
/// through the exact truncated expansion. Equals (D_n f)(W) for interior
/// W and the zero tensor for exterior W.
SpinorTensor cauchy_fueter_apply(const TensorFn& f, const Biquaternion& w, HalfInt l_max);

struct LaurentCoefficientTable {
    // keyed by (2l, 2mu, 2nu)
    std::map<std::array<int, 3>, GaussianRational> a; // F-part (degrees >= 0)
    std::map<std::array<int, 3>, GaussianRational> b; // F'-part (degrees <= -n-2)
};

LaurentCoefficientTable laurent_coefficients(const TensorFn& f, HalfInt l_max);
TensorFn reconstruct_from_coefficients(const LaurentCoefficientTable& table, int n);

/// Hermitian inner products on the left resp. right regular spaces.
GaussianRational inner_product_F(const TensorFn& f1, const TensorFn& f2);
GaussianRational inner_product_G(const TensorFn& g1, const TensorFn& g2);

} // namespace nregular

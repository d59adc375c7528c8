#pragma once

#include "nregular/tensor.hpp"

#include <vector>

namespace nregular {

/// Half-integer stored as a doubled integer; all range and parity checks
/// reduce to integer arithmetic on `twice`.
struct HalfInt {
    int twice = 0;

    HalfInt() = default;
    explicit HalfInt(int t) : twice(t) {}
    static HalfInt of_int(int v) { return HalfInt(2 * v); }
    static HalfInt half(int numerator) { return HalfInt(numerator); }

    bool is_integer() const { return twice % 2 == 0; }
    int as_twice() const { return twice; }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    HalfInt operator-() const { return HalfInt(-twice); }
    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
    friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }

    std::string str() const;
};

enum class Family { F, G, Fp, Gp };

struct BasisIndex {
    Family family;
    int n;
    HalfInt l, mu, nu;

    bool valid() const;
    std::string str() const;
};

/// SU(2) matrix coefficient t^l_{nu,mu}(Z): the s^0 residue of
/// (s z11 + z21)^{l-mu} (s z12 + z22)^{l+mu} s^{-l+nu-1}. Out-of-range or
/// parity-inconsistent indices give the zero polynomial.
LaurentFn t_coeff(HalfInt l, HalfInt nu, HalfInt mu);

/// N(Z)^{-1} t^l_{nu,mu}(Z^{-1}); homogeneous of degree -2l-2.
LaurentFn t_coeff_inverted(HalfInt l, HalfInt nu, HalfInt mu);

/// The four families. F, G are given by the direct differentiated
/// definitions; F', G' are built recursively from the explicit rank-1
/// base cases (both recursion rows primed — the alternative readings are
/// cross-checked in recursion tests).
TensorFn F_basis(int n, HalfInt l, HalfInt mu, HalfInt nu);
/// Second displayed form of the F definition (rows (d21, d22), shifted nu).
TensorFn F_basis_alt(int n, HalfInt l, HalfInt mu, HalfInt nu);
TensorFn G_basis(int n, HalfInt l, HalfInt mu, HalfInt nu);
TensorFn Fp_basis(int n, HalfInt l, HalfInt mu, HalfInt nu);
TensorFn Gp_basis(int n, HalfInt l, HalfInt mu, HalfInt nu);

TensorFn basis_fn(const BasisIndex& idx);

/// All valid (mu, nu) pairs at fixed (family, n, l); size (2l+1)(2l+n+1).
std::vector<BasisIndex> enumerate_indices(Family fam, int n, HalfInt l);

/// All l values with 2l in {0, .., 2*l_max} (step 1/2).
std::vector<HalfInt> l_values(HalfInt l_max);

} // namespace nregular

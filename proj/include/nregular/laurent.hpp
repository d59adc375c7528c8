#pragma once

#include "nregular/biquaternion.hpp"
#include "nregular/errors.hpp"
#include "nregular/gaussian_rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace nregular {

/// Exponent 4-tuple on the matrix entries (z11, z12, z21, z22),
/// or on the real coordinates (x0, x1, x2, x3) for XPoly.
using Expo = std::array<int, 4>;

/// Sparse polynomial in four commuting variables over Q(i).
/// Used for real-coordinate work: sphere restrictions and the
/// x-form differential operator oracles.
struct XPoly {
    std::map<Expo, GaussianRational> terms;

    XPoly() = default;
    static XPoly constant(const GaussianRational& c);
    static XPoly variable(int k);

    bool is_zero() const { return terms.empty(); }

    void add_term(const Expo& e, const GaussianRational& c);

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const GaussianRational& c, const XPoly& a);
    friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    XPoly pow(int n) const;
    XPoly partial(int k) const;
    GaussianRational evaluate(const std::array<GaussianRational, 4>& x) const;
};

/// Laurent object P(z11,z12,z21,z22) * N(Z)^{-k} with exact coefficients.
///
/// Canonical form: when denom_pow > 0 the numerator is not divisible by
/// N(Z); the zero function has an empty numerator and denom_pow = 0.
/// The homogeneity degree of a term with exponent e is |e| - 2*denom_pow.
class LaurentFn {
public:
    LaurentFn() = default;

    static LaurentFn zero() { return {}; }
    static LaurentFn constant(const GaussianRational& c);
    static LaurentFn one() { return constant(GaussianRational(1)); }
    /// Coordinate function z_ij, i,j in {1,2}.
    static LaurentFn coordinate(int i, int j);
    /// The norm polynomial N(Z) = z11 z22 - z12 z21.
    static LaurentFn norm_poly();
    /// N(Z)^{-k}.
    static LaurentFn norm_inverse(int k = 1);
    /// Single term c * z^e * N^{-k}.
    static LaurentFn term(const Expo& e, const GaussianRational& c, int k = 0);

    bool is_zero() const { return numerator_.empty(); }
    int denom_pow() const { return denom_pow_; }
    const std::map<Expo, GaussianRational>& numerator() const { return numerator_; }

    LaurentFn operator-() const;
    friend LaurentFn operator+(const LaurentFn& a, const LaurentFn& b);
    friend LaurentFn operator-(const LaurentFn& a, const LaurentFn& b);
    friend LaurentFn operator*(const LaurentFn& a, const LaurentFn& b);
    friend LaurentFn operator*(const GaussianRational& c, const LaurentFn& a);
    friend bool operator==(const LaurentFn& a, const LaurentFn& b);
    friend bool operator!=(const LaurentFn& a, const LaurentFn& b) { return !(a == b); }

    LaurentFn& operator+=(const LaurentFn& o) { return *this = *this + o; }

    /// d/dz_ij by the quotient rule, recanonicalized.
    LaurentFn partial(int i, int j) const;

    /// Exact evaluation. Throws PoleAtNullConeError when denom_pow > 0
    /// and N(Z) = 0.
    GaussianRational evaluate(const Biquaternion& z) const;
    std::complex<double> evaluate_double(const std::array<std::complex<double>, 4>& z) const;

    /// Split into homogeneous pieces keyed by degree |e| - 2k.
    std::map<int, LaurentFn> homogeneous_split() const;
    /// True iff every term has the given homogeneity degree.
    bool is_homogeneous(int* degree = nullptr) const;

    /// Substitute z_pq -> sum_rs L[pq][rs] * z_rs (a linear entry change
    /// under which N transforms as N -> n_factor * N).
    LaurentFn substitute_linear(const std::array<std::array<GaussianRational, 4>, 4>& L,
                                const GaussianRational& n_factor) const;

    /// Substitute Z -> Z^{-1} = Z+ / N.
    LaurentFn substitute_inverse() const;

    /// Substitute Z -> Z + b; polynomial inputs only.
    LaurentFn substitute_translate(const Biquaternion& b) const;

    /// Coefficient conjugation plus the entry map of complex conjugation
    /// on real quaternions: f(Z) -> conj(f(Z)) as a function on H^x.
    LaurentFn sphere_conjugate() const;

    /// Coefficient conjugation plus transposition z12 <-> z21:
    /// f(Z) -> conj(f(Z*)).
    LaurentFn conj_transpose_arg() const;

    /// Restriction to the unit sphere: substitutes the entry dictionary
    /// z_ij(x) and drops N^{-k} (N = 1 there).
    XPoly to_real_sphere_poly() const;

    /// Full dictionary substitution z -> z(x); polynomial inputs only.
    XPoly to_x_poly() const;

    /// Canonical JSON-ready dump: sorted exponent keys -> coefficient strings.
    std::string canonical_string() const;

private:
    void canonicalize();
    std::map<Expo, GaussianRational> numerator_;
    int denom_pow_ = 0;
};

/// x-coordinate polynomial back to entry coordinates (inverse dictionary).
LaurentFn x_poly_to_laurent(const XPoly& p);

/// Entry dictionary: z_ij as XPoly in (x0,x1,x2,x3).
XPoly entry_dictionary(int i, int j);

} // namespace nregular

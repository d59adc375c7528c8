#pragma once

#include "nregular/gaussian_rational.hpp"
#include "nregular/errors.hpp"

#include <array>

namespace nregular {

struct EBasisCoords;

/// Complexified quaternion in the 2x2-matrix realization.
///
/// The embedding is e0 -> identity, e_k -> -i * sigma_k (Pauli matrices),
/// which gives the entry dictionary
///   z11 = c0 - i c3,  z12 = -c2 - i c1,
///   z21 =  c2 - i c1, z22 = c0 + i c3,
/// with N(Z) = z11 z22 - z12 z21 = c0^2 + c1^2 + c2^2 + c3^2.
struct Biquaternion {
    GaussianRational z11, z12, z21, z22;

    Biquaternion() = default;
    Biquaternion(GaussianRational a11, GaussianRational a12,
                 GaussianRational a21, GaussianRational a22)
        : z11(std::move(a11)), z12(std::move(a12)), z21(std::move(a21)), z22(std::move(a22)) {}

    static Biquaternion zero() { return {}; }
    static Biquaternion one();
    /// Basis unit e_k, k = 0..3.
    static Biquaternion unit(int k);
    static Biquaternion scalar(const GaussianRational& c);

    const GaussianRational& entry(int i, int j) const;
    GaussianRational& entry(int i, int j);

    bool is_zero() const { return z11.is_zero() && z12.is_zero() && z21.is_zero() && z22.is_zero(); }

    Biquaternion operator-() const { return {-z11, -z12, -z21, -z22}; }
    friend Biquaternion operator+(const Biquaternion& a, const Biquaternion& b);
    friend Biquaternion operator-(const Biquaternion& a, const Biquaternion& b);
    friend Biquaternion operator*(const Biquaternion& a, const Biquaternion& b);
    friend Biquaternion operator*(const GaussianRational& c, const Biquaternion& a);
    friend bool operator==(const Biquaternion& a, const Biquaternion& b);
    friend bool operator!=(const Biquaternion& a, const Biquaternion& b) { return !(a == b); }
};

/// Quaternionic conjugation Z+; equals the matrix adjugate.
Biquaternion conj_plus(const Biquaternion& z);

/// Quadratic norm N(Z) = det of the matrix realization.
GaussianRational norm(const Biquaternion& z);

/// Z^{-1} = Z+ / N(Z). Throws NonInvertibleError when N(Z) = 0.
Biquaternion invert(const Biquaternion& z);

/// Complex conjugation relative to H; fixes real-coordinate quaternions.
Biquaternion bar(const Biquaternion& z);

/// Matrix adjoint Z* (conjugate transpose).
Biquaternion adjoint(const Biquaternion& z);

/// Coefficients of Z in the e0..e3 basis.
struct EBasisCoords {
    std::array<GaussianRational, 4> c;

    EBasisCoords() = default;
    explicit EBasisCoords(std::array<GaussianRational, 4> cc) : c(std::move(cc)) {}

    bool is_real() const {
        for (const auto& x : c)
            if (!x.is_real()) return false;
        return true;
    }
};

Biquaternion coords_to_matrix(const EBasisCoords& c);
EBasisCoords matrix_to_coords(const Biquaternion& z);

} // namespace nregular

#include "nregular/biquaternion.hpp"

namespace nregular {

namespace {
const GaussianRational kOne(1);
const GaussianRational kI = GaussianRational::i();
}

Biquaternion Biquaternion::one() { return {kOne, {}, {}, kOne}; }

Biquaternion Biquaternion::scalar(const GaussianRational& c) { return {c, {}, {}, c}; }

Biquaternion Biquaternion::unit(int k) {
    switch (k) {
        case 0: return one();
        case 1: return {{}, -kI, -kI, {}};
        case 2: return {{}, GaussianRational(-1), GaussianRational(1), {}};
        case 3: return {-kI, {}, {}, kI};
        default: throw IndexRangeError("e-basis index must be 0..3");
    }
}

const GaussianRational& Biquaternion::entry(int i, int j) const {
    if (i == 1) return j == 1 ? z11 : z12;
    return j == 1 ? z21 : z22;
}

GaussianRational& Biquaternion::entry(int i, int j) {
    if (i == 1) return j == 1 ? z11 : z12;
    return j == 1 ? z21 : z22;
}

Biquaternion operator+(const Biquaternion& a, const Biquaternion& b) {
    return {a.z11 + b.z11, a.z12 + b.z12, a.z21 + b.z21, a.z22 + b.z22};
}

Biquaternion operator-(const Biquaternion& a, const Biquaternion& b) {
    return {a.z11 - b.z11, a.z12 - b.z12, a.z21 - b.z21, a.z22 - b.z22};
}

Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
    return {a.z11 * b.z11 + a.z12 * b.z21, a.z11 * b.z12 + a.z12 * b.z22,
            a.z21 * b.z11 + a.z22 * b.z21, a.z21 * b.z12 + a.z22 * b.z22};
}

Biquaternion operator*(const GaussianRational& c, const Biquaternion& a) {
    return {c * a.z11, c * a.z12, c * a.z21, c * a.z22};
}

bool operator==(const Biquaternion& a, const Biquaternion& b) {
    return a.z11 == b.z11 && a.z12 == b.z12 && a.z21 == b.z21 && a.z22 == b.z22;
}

Biquaternion conj_plus(const Biquaternion& z) {
    return {z.z22, -z.z12, -z.z21, z.z11};
}

GaussianRational norm(const Biquaternion& z) {
    return z.z11 * z.z22 - z.z12 * z.z21;
}

Biquaternion invert(const Biquaternion& z) {
    GaussianRational n = norm(z);
    if (n.is_zero()) throw NonInvertibleError();
    GaussianRational inv = n.inverse();
    return inv * conj_plus(z);
}

Biquaternion bar(const Biquaternion& z) {
    return {z.z22.conj(), -z.z21.conj(), -z.z12.conj(), z.z11.conj()};
}

Biquaternion adjoint(const Biquaternion& z) {
    return {z.z11.conj(), z.z21.conj(), z.z12.conj(), z.z22.conj()};
}

Biquaternion coords_to_matrix(const EBasisCoords& c) {
    Biquaternion out;
    for (int k = 0; k < 4; ++k)
        out = out + c.c[static_cast<size_t>(k)] * Biquaternion::unit(k);
    return out;
}

EBasisCoords matrix_to_coords(const Biquaternion& z) {
    GaussianRational half(1, 2);
    GaussianRational half_i = half * GaussianRational::i();
    EBasisCoords c;
    c.c[0] = half * (z.z11 + z.z22);
    c.c[1] = half_i * (z.z12 + z.z21);
    c.c[2] = half * (z.z21 - z.z12);
    c.c[3] = half_i * (z.z11 - z.z22);
    return c;
}

} // namespace nregular

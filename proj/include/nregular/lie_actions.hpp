#pragma once

#include "nregular/tensor.hpp"

#include <vector>

namespace nregular {

/// Block matrix (A B; C D) over the biquaternions.
struct GlElement {
    Biquaternion A, B, C, D;

    static GlElement a_block(const Biquaternion& a) { return {a, {}, {}, {}}; }
    static GlElement b_block(const Biquaternion& b) { return {{}, b, {}, {}}; }
    static GlElement c_block(const Biquaternion& c) { return {{}, {}, c, {}}; }
    static GlElement d_block(const Biquaternion& d) { return {{}, {}, {}, d}; }
};

/// Differentiated action on S-valued (left) resp. S'-valued (right)
/// functions; dispatched on the tensor side.
TensorFn act_algebra(const GlElement& x, const TensorFn& f);

/// Group action of diag(a, d) (blocks of h itself, both invertible).
TensorFn act_diagonal(const Biquaternion& a, const Biquaternion& d, const TensorFn& f);

/// Group action of the off-diagonal involution (0 1; 1 0).
TensorFn act_inversion(const TensorFn& f);

/// Group action of the translation (1 0; 0 1)-conjugate sending Z to Z+b;
/// polynomial inputs only.
TensorFn act_translation(const Biquaternion& b, const TensorFn& f);

/// The 16 elementary one-block generators of gl(2,H_C) with e-basis entries.
std::vector<GlElement> one_block_generators();

/// Real generators of u(2,2) in the block realization: skew-Hermitian
/// diagonal blocks and paired off-diagonal blocks (0 B; B* 0).
std::vector<GlElement> u22_generators();

/// Exact row rank over the Gaussian rationals (in-place elimination).
int exact_rank(std::vector<std::vector<GaussianRational>> rows);

/// Dimension of the span of a family of tensor functions.
int span_dimension(const std::vector<TensorFn>& fns);

} // namespace nregular

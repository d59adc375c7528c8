#pragma once

#include "nregular/tensor.hpp"

namespace nregular {

/// Fueter operator applied at slot k. In entry coordinates the 2x2
/// operator matrices are
///   nabla   = 2 (d11 d21; d12 d22),
///   nabla+  = 2 (d22 -d21; -d12 d11),
/// acting on the column index from the left (S side) or on the row index
/// from the right (S' side); the factor 2 comes from the chain rule of
/// the entry dictionary.
TensorFn nabla_slot(const TensorFn& f, int k);
TensorFn nabla_plus_slot(const TensorFn& f, int k);

/// True iff nabla_plus_slot annihilates f at every slot (left regularity
/// for column-valued f, right regularity for row-valued f).
bool is_n_regular(const TensorFn& f);

/// Wave operator; in entry coordinates 4 (d11 d22 - d12 d21).
LaurentFn laplacian(const LaurentFn& f);
TensorFn laplacian(const TensorFn& f);

/// Euler degree operator: multiplies each homogeneous piece by its degree.
LaurentFn deg_op(const LaurentFn& f);
TensorFn deg_op(const TensorFn& f);

TensorFn deg_shift(const TensorFn& f, int m);

/// Spectral inverse of (deg + m): each homogeneous piece of degree d is
/// scaled by 1/(d+m). Throws ResonantDegreeError when a piece has d = -m.
LaurentFn deg_shift_inverse(const LaurentFn& f, int m);
TensorFn deg_shift_inverse(const TensorFn& f, int m);

/// D_n = (deg+n)(deg+n-1)...(deg+2); the empty product D_1 is the identity.
TensorFn Dn(const TensorFn& f, int n);
TensorFn Dn_inverse(const TensorFn& f, int n);

} // namespace nregular

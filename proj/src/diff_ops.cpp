#include "nregular/diff_ops.hpp"

namespace nregular {

namespace {

struct OpEntry {
    int i, j;  // which partial d_ij
    int sign;  // 0 means absent
};

// op[r][c], r,c in 0..1, with an overall factor 2.
using OpMat = std::array<std::array<OpEntry, 2>, 2>;

const OpMat kNabla = {{{OpEntry{1, 1, 1}, OpEntry{2, 1, 1}},
                       {OpEntry{1, 2, 1}, OpEntry{2, 2, 1}}}};

const OpMat kNablaPlus = {{{OpEntry{2, 2, 1}, OpEntry{2, 1, -1}},
                           {OpEntry{1, 2, -1}, OpEntry{1, 1, 1}}}};

TensorFn apply_op_slot(const OpMat& op, const TensorFn& f, int k) {
    if (k < 1 || k > f.rank) throw SlotRangeError();
    TensorFn out(f.side, f.rank);
    unsigned bit = 1u << (k - 1);
    GaussianRational two(2);
    for (unsigned idx = 0; idx < f.components.size(); ++idx) {
        if (f.components[idx].is_zero()) continue;
        int b = (idx & bit) ? 1 : 0;
        for (int c = 0; c < 2; ++c) {
            const OpEntry& e = f.side == Side::Column ? op[c][b] : op[b][c];
            unsigned nidx = (idx & ~bit) | (c ? bit : 0u);
            LaurentFn d = f.components[idx].partial(e.i, e.j);
            if (e.sign < 0) d = -d;
            out.components[nidx] += two * d;
        }
    }
    return out;
}

} // namespace

TensorFn nabla_slot(const TensorFn& f, int k) { return apply_op_slot(kNabla, f, k); }

TensorFn nabla_plus_slot(const TensorFn& f, int k) { return apply_op_slot(kNablaPlus, f, k); }

bool is_n_regular(const TensorFn& f) {
    for (int k = 1; k <= f.rank; ++k)
        if (!nabla_plus_slot(f, k).is_zero()) return false;
    return true;
}

LaurentFn laplacian(const LaurentFn& f) {
    GaussianRational four(4);
    return four * (f.partial(1, 1).partial(2, 2) - f.partial(1, 2).partial(2, 1));
}

TensorFn laplacian(const TensorFn& f) {
    TensorFn out = f;
    for (auto& c : out.components) c = laplacian(c);
    return out;
}

LaurentFn deg_op(const LaurentFn& f) {
    LaurentFn out;
    for (const auto& [d, piece] : f.homogeneous_split()) out += GaussianRational(d) * piece;
    return out;
}

TensorFn deg_op(const TensorFn& f) {
    TensorFn out = f;
    for (auto& c : out.components) c = deg_op(c);
    return out;
}

TensorFn deg_shift(const TensorFn& f, int m) { return deg_op(f) + GaussianRational(m) * f; }

LaurentFn deg_shift_inverse(const LaurentFn& f, int m) {
    LaurentFn out;
    for (const auto& [d, piece] : f.homogeneous_split()) {
        if (d + m == 0) throw ResonantDegreeError();
        out += GaussianRational(1, d + m) * piece;
    }
    return out;
}

TensorFn deg_shift_inverse(const TensorFn& f, int m) {
    TensorFn out = f;
    for (auto& c : out.components) c = deg_shift_inverse(c, m);
    return out;
}

TensorFn Dn(const TensorFn& f, int n) {
    TensorFn out = f;
    for (int m = 2; m <= n; ++m) out = deg_shift(out, m);
    return out;
}

TensorFn Dn_inverse(const TensorFn& f, int n) {
    TensorFn out = f;
    for (int m = 2; m <= n; ++m) out = deg_shift_inverse(out, m);
    return out;
}

} // namespace nregular

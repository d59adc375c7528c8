#include "nregular/lie_actions.hpp"

namespace nregular {

namespace {

// Sum_pq M_pq d_pq applied componentwise.
TensorFn trace_op(const Mat2L& m, const TensorFn& f) {
    TensorFn out(f.side, f.rank);
    for (size_t c = 0; c < f.components.size(); ++c) {
        LaurentFn acc;
        for (int p = 1; p <= 2; ++p)
            for (int q = 1; q <= 2; ++q) {
                const LaurentFn& coeff = m.at(p, q);
                if (!coeff.is_zero()) acc += coeff * f.components[c].partial(p, q);
            }
        out.components[c] = acc;
    }
    return out;
}

LaurentFn trace_of(const Mat2L& m) { return m.m11 + m.m22; }

TensorFn slot_sum(const Mat2L& m, const TensorFn& f) {
    TensorFn out(f.side, f.rank);
    for (int k = 1; k <= f.rank; ++k) out += slot_apply(m, k, f);
    return out;
}

// Z^{-1} = Z+ / N as an entrywise Laurent matrix.
Mat2L z_inverse_matrix() {
    LaurentFn ninv = LaurentFn::norm_inverse(1);
    return {ninv * LaurentFn::coordinate(2, 2), -(ninv * LaurentFn::coordinate(1, 2)),
            -(ninv * LaurentFn::coordinate(2, 1)), ninv * LaurentFn::coordinate(1, 1)};
}

} // namespace

TensorFn act_algebra(const GlElement& x, const TensorFn& f) {
    Mat2L z = Mat2L::z_matrix();
    TensorFn out(f.side, f.rank);
    if (f.side == Side::Column) {
        if (!x.A.is_zero()) {
            Mat2L az = Mat2L::from_biquat(x.A) * z;
            out += -trace_op(az, f);
        }
        if (!x.B.is_zero()) out += -trace_op(Mat2L::from_biquat(x.B), f);
        if (!x.C.is_zero()) {
            Mat2L cz = Mat2L::from_biquat(x.C) * z;
            Mat2L zcz = z * cz;
            out += trace_op(zcz, f);
            out += trace_of(cz) * f;
            out += slot_sum(cz, f);
        }
        if (!x.D.is_zero()) {
            Mat2L d = Mat2L::from_biquat(x.D);
            out += trace_op(z * d, f);
            out += trace_of(d) * f;
            out += slot_sum(d, f);
        }
    } else {
        if (!x.A.is_zero()) {
            Mat2L a = Mat2L::from_biquat(x.A);
            out += -trace_op(a * z, f);
            out += -(trace_of(a) * f);
            out += -slot_sum(a, f);
        }
        if (!x.B.is_zero()) out += -trace_op(Mat2L::from_biquat(x.B), f);
        if (!x.C.is_zero()) {
            Mat2L zc = z * Mat2L::from_biquat(x.C);
            out += trace_op(zc * z, f);
            out += trace_of(zc) * f;
            out += slot_sum(zc, f);
        }
        if (!x.D.is_zero()) out += trace_op(z * Mat2L::from_biquat(x.D), f);
    }
    return out;
}

TensorFn act_diagonal(const Biquaternion& a, const Biquaternion& d, const TensorFn& f) {
    Biquaternion ai = invert(a);
    // argument a^{-1} Z d, entrywise linear
    std::array<std::array<GaussianRational, 4>, 4> L{};
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q)
            for (int r = 1; r <= 2; ++r)
                for (int s = 1; s <= 2; ++s)
                    L[static_cast<size_t>((p - 1) * 2 + (q - 1))]
                     [static_cast<size_t>((r - 1) * 2 + (s - 1))] += ai.entry(p, r) * d.entry(s, q);
    GaussianRational n_factor = norm(a).inverse() * norm(d);
    TensorFn out = substitute_linear(f, L, n_factor);
    if (f.side == Side::Column) {
        // prefactor N(d) (d x ... x d)
        for (int k = 1; k <= f.rank; ++k) out = slot_apply(d, k, out);
        return norm(d) * out;
    }
    // prefactor (a^{-1} x ... x a^{-1}) / N(a), acting on the right
    for (int k = 1; k <= f.rank; ++k) out = slot_apply(ai, k, out);
    return norm(a).inverse() * out;
}

TensorFn act_inversion(const TensorFn& f) {
    TensorFn out = substitute_inverse_arg(f);
    Mat2L zi = z_inverse_matrix();
    for (int k = 1; k <= f.rank; ++k) out = slot_apply(zi, k, out);
    out = LaurentFn::norm_inverse(1) * out;
    if (f.side == Side::Row && f.rank % 2 != 0) out = -out;
    return out;
}

TensorFn act_translation(const Biquaternion& b, const TensorFn& f) {
    return substitute_translate_arg(f, b);
}

std::vector<GlElement> one_block_generators() {
    std::vector<GlElement> out;
    for (int k = 0; k < 4; ++k) {
        Biquaternion e = Biquaternion::unit(k);
        out.push_back(GlElement::a_block(e));
        out.push_back(GlElement::b_block(e));
        out.push_back(GlElement::c_block(e));
        out.push_back(GlElement::d_block(e));
    }
    return out;
}

std::vector<GlElement> u22_generators() {
    std::vector<GlElement> out;
    GaussianRational i = GaussianRational::i();
    // skew-Hermitian basis of the 2x2 blocks: i e0 and e1, e2, e3
    std::vector<Biquaternion> skew = {i * Biquaternion::one(), Biquaternion::unit(1),
                                      Biquaternion::unit(2), Biquaternion::unit(3)};
    for (const auto& s : skew) {
        out.push_back(GlElement::a_block(s));
        out.push_back(GlElement::d_block(s));
    }
    // off-diagonal pairs (0 B; B* 0), B over a real basis of the blocks
    for (int k = 0; k < 4; ++k)
        for (int im = 0; im < 2; ++im) {
            Biquaternion b = Biquaternion::unit(k);
            if (im) b = i * b;
            GlElement x;
            x.B = b;
            x.C = adjoint(b);
            out.push_back(x);
        }
    return out;
}

int exact_rank(std::vector<std::vector<GaussianRational>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < cols; ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        GaussianRational inv = rows[r][col].inverse();
        for (size_t c = col; c < cols; ++c) rows[r][c] *= inv;
        for (size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][col].is_zero()) continue;
            GaussianRational factor = rows[q][col];
            for (size_t c = col; c < cols; ++c) rows[q][c] -= factor * rows[r][c];
        }
        ++r;
        ++rank;
    }
    return rank;
}

int span_dimension(const std::vector<TensorFn>& fns) {
    if (fns.empty()) return 0;
    // shared coordinate system: (component, denom_pow, exponent) triples
    std::map<std::tuple<size_t, int, Expo>, size_t> coords;
    for (const auto& f : fns)
        for (size_t c = 0; c < f.components.size(); ++c)
            for (const auto& [e, v] : f.components[c].numerator())
                coords.emplace(std::make_tuple(c, f.components[c].denom_pow(), e), coords.size());
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& f : fns) {
        std::vector<GaussianRational> row(coords.size());
        for (size_t c = 0; c < f.components.size(); ++c)
            for (const auto& [e, v] : f.components[c].numerator())
                row[coords.at(std::make_tuple(c, f.components[c].denom_pow(), e))] = v;
        rows.push_back(std::move(row));
    }
    return exact_rank(std::move(rows));
}

} // namespace nregular

#include "nregular/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nregular {

namespace detail {

unsigned permute_bits(unsigned idx, const std::vector<int>& perm) {
    unsigned out = 0;
    for (size_t p = 0; p < perm.size(); ++p)
        out |= ((idx >> perm[p]) & 1u) << p;
    return out;
}

} // namespace detail

namespace {

void check_rank(int n) {
    if (n < 1 || n > kMaxRank) throw RankMismatchError("tensor rank out of range");
}

void check_slot(int k, int n) {
    if (k < 1 || k > n) throw SlotRangeError();
}

// All permutations of {0..n-1}.
const std::vector<std::vector<int>>& permutations(int n) {
    static std::vector<std::vector<std::vector<int>>> cache(kMaxRank + 1);
    auto& out = cache[static_cast<size_t>(n)];
    if (out.empty()) {
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

// ---------------------------------------------------------- SpinorTensor

SpinorTensor::SpinorTensor(Side s, int n) : side(s), rank(n) {
    check_rank(n);
    data.assign(1u << n, GaussianRational());
}

SpinorTensor SpinorTensor::basis(Side s, int n, unsigned idx) {
    SpinorTensor t(s, n);
    t.data[idx] = GaussianRational(1);
    return t;
}

bool SpinorTensor::is_zero() const {
    for (const auto& c : data)
        if (!c.is_zero()) return false;
    return true;
}

SpinorTensor SpinorTensor::operator-() const {
    SpinorTensor out = *this;
    for (auto& c : out.data) c = -c;
    return out;
}

SpinorTensor operator+(const SpinorTensor& a, const SpinorTensor& b) {
    if (a.rank != b.rank || a.side != b.side) throw RankMismatchError();
    SpinorTensor out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += b.data[i];
    return out;
}

SpinorTensor operator-(const SpinorTensor& a, const SpinorTensor& b) { return a + (-b); }

SpinorTensor operator*(const GaussianRational& c, const SpinorTensor& a) {
    SpinorTensor out = a;
    for (auto& x : out.data) x *= c;
    return out;
}

bool operator==(const SpinorTensor& a, const SpinorTensor& b) {
    return a.side == b.side && a.rank == b.rank && a.data == b.data;
}

SpinorTensor slot_apply(const Biquaternion& a, int k, const SpinorTensor& t) {
    check_slot(k, t.rank);
    SpinorTensor out(t.side, t.rank);
    unsigned bit = 1u << (k - 1);
    for (unsigned idx = 0; idx < t.data.size(); ++idx) {
        if (t.data[idx].is_zero()) continue;
        int b = (idx & bit) ? 2 : 1; // component index at slot k
        for (int c = 1; c <= 2; ++c) {
            unsigned nidx = (idx & ~bit) | (c == 2 ? bit : 0u);
            // columns transform by A on the left, rows by A on the right
            const GaussianRational& coeff =
                t.side == Side::Column ? a.entry(c, b) : a.entry(b, c);
            out.data[nidx] += coeff * t.data[idx];
        }
    }
    return out;
}

SpinorTensor symmetrize(const SpinorTensor& t) {
    SpinorTensor out(t.side, t.rank);
    const auto& perms = permutations(t.rank);
    for (const auto& p : perms)
        for (unsigned idx = 0; idx < t.data.size(); ++idx)
            out.data[detail::permute_bits(idx, p)] += t.data[idx];
    GaussianRational w(1, factorial(t.rank));
    for (auto& c : out.data) c *= w;
    return out;
}

bool is_symmetric(const SpinorTensor& t) { return symmetrize(t) == t; }

GaussianRational contract(const SpinorTensor& t_row, const SpinorTensor& t_col) {
    if (t_row.side != Side::Row || t_col.side != Side::Column || t_row.rank != t_col.rank)
        throw RankMismatchError("contraction needs a row/column pair of equal rank");
    GaussianRational out;
    for (size_t i = 0; i < t_row.data.size(); ++i) out += t_row.data[i] * t_col.data[i];
    return out;
}

SpinorTensor casimir_slot_sum(const SpinorTensor& t, int j, int k) {
    check_slot(j, t.rank);
    check_slot(k, t.rank);
    if (j == k) throw SlotRangeError("slot pair must be distinct");
    SpinorTensor out(t.side, t.rank);
    for (int i = 0; i < 4; ++i) {
        Biquaternion e = Biquaternion::unit(i);
        out = out + slot_apply(e, j, slot_apply(e, k, t));
    }
    return out;
}

// ----------------------------------------------------------------- Mat2L

Mat2L Mat2L::from_biquat(const Biquaternion& a) {
    return {LaurentFn::constant(a.z11), LaurentFn::constant(a.z12),
            LaurentFn::constant(a.z21), LaurentFn::constant(a.z22)};
}

Mat2L Mat2L::z_matrix() {
    return {LaurentFn::coordinate(1, 1), LaurentFn::coordinate(1, 2),
            LaurentFn::coordinate(2, 1), LaurentFn::coordinate(2, 2)};
}

const LaurentFn& Mat2L::at(int i, int j) const {
    if (i == 1) return j == 1 ? m11 : m12;
    return j == 1 ? m21 : m22;
}

Mat2L operator*(const Mat2L& a, const Mat2L& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

// -------------------------------------------------------------- TensorFn

TensorFn::TensorFn(Side s, int n) : side(s), rank(n) {
    check_rank(n);
    components.assign(1u << n, LaurentFn());
}

bool TensorFn::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

TensorFn TensorFn::operator-() const {
    TensorFn out = *this;
    for (auto& c : out.components) c = -c;
    return out;
}

TensorFn operator+(const TensorFn& a, const TensorFn& b) {
    if (a.rank != b.rank || a.side != b.side) throw RankMismatchError();
    TensorFn out = a;
    for (size_t i = 0; i < out.components.size(); ++i)
        out.components[i] = out.components[i] + b.components[i];
    return out;
}

TensorFn operator-(const TensorFn& a, const TensorFn& b) { return a + (-b); }

TensorFn operator*(const GaussianRational& c, const TensorFn& a) {
    TensorFn out = a;
    for (auto& x : out.components) x = c * x;
    return out;
}

TensorFn operator*(const LaurentFn& c, const TensorFn& a) {
    TensorFn out = a;
    for (auto& x : out.components) x = c * x;
    return out;
}

bool operator==(const TensorFn& a, const TensorFn& b) {
    return a.side == b.side && a.rank == b.rank && a.components == b.components;
}

SpinorTensor TensorFn::evaluate(const Biquaternion& z) const {
    SpinorTensor out(side, rank);
    for (size_t i = 0; i < components.size(); ++i) out.data[i] = components[i].evaluate(z);
    return out;
}

std::string TensorFn::canonical_string() const {
    std::ostringstream os;
    os << "{\"side\":\"" << (side == Side::Column ? "S" : "S'") << "\",\"rank\":" << rank
       << ",\"components\":[";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << ",";
        os << components[i].canonical_string();
    }
    os << "]}";
    return os.str();
}

TensorFn slot_apply(const Mat2L& a, int k, const TensorFn& f) {
    check_slot(k, f.rank);
    TensorFn out(f.side, f.rank);
    unsigned bit = 1u << (k - 1);
    for (unsigned idx = 0; idx < f.components.size(); ++idx) {
        if (f.components[idx].is_zero()) continue;
        int b = (idx & bit) ? 2 : 1;
        for (int c = 1; c <= 2; ++c) {
            unsigned nidx = (idx & ~bit) | (c == 2 ? bit : 0u);
            const LaurentFn& coeff = f.side == Side::Column ? a.at(c, b) : a.at(b, c);
            out.components[nidx] += coeff * f.components[idx];
        }
    }
    return out;
}

TensorFn slot_apply(const Biquaternion& a, int k, const TensorFn& f) {
    return slot_apply(Mat2L::from_biquat(a), k, f);
}

TensorFn symmetrize(const TensorFn& f) {
    TensorFn out(f.side, f.rank);
    for (const auto& p : permutations(f.rank))
        for (unsigned idx = 0; idx < f.components.size(); ++idx)
            out.components[detail::permute_bits(idx, p)] += f.components[idx];
    GaussianRational w(1, factorial(f.rank));
    for (auto& c : out.components) c = w * c;
    return out;
}

bool is_symmetric_valued(const TensorFn& f) { return symmetrize(f) == f; }

std::map<int, TensorFn> homogeneous_split(const TensorFn& f) {
    std::map<int, TensorFn> out;
    for (size_t i = 0; i < f.components.size(); ++i)
        for (const auto& [d, piece] : f.components[i].homogeneous_split()) {
            auto it = out.find(d);
            if (it == out.end()) it = out.emplace(d, TensorFn(f.side, f.rank)).first;
            it->second.components[i] = piece;
        }
    return out;
}

bool is_homogeneous(const TensorFn& f, int* degree) {
    auto pieces = homogeneous_split(f);
    if (pieces.size() > 1) return false;
    if (degree) *degree = pieces.empty() ? 0 : pieces.begin()->first;
    return true;
}

TensorFn substitute_linear(const TensorFn& f, const std::array<std::array<GaussianRational, 4>, 4>& L,
                           const GaussianRational& n_factor) {
    TensorFn out = f;
    for (auto& c : out.components) c = c.substitute_linear(L, n_factor);
    return out;
}

TensorFn substitute_inverse_arg(const TensorFn& f) {
    TensorFn out = f;
    for (auto& c : out.components) c = c.substitute_inverse();
    return out;
}

TensorFn substitute_translate_arg(const TensorFn& f, const Biquaternion& b) {
    TensorFn out = f;
    for (auto& c : out.components) c = c.substitute_translate(b);
    return out;
}

TensorFn conj_dagger(const TensorFn& f) {
    TensorFn out(f.side == Side::Column ? Side::Row : Side::Column, f.rank);
    for (size_t i = 0; i < f.components.size(); ++i)
        out.components[i] = f.components[i].conj_transpose_arg();
    return out;
}

} // namespace nregular

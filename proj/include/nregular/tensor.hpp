#pragma once

#include "nregular/biquaternion.hpp"
#include "nregular/laurent.hpp"

#include <vector>

namespace nregular {

/// Which 2-dimensional module the tensor factors live in: columns (S)
/// acted on by matrices from the left, rows (S') acted on from the right.
enum class Side { Column, Row };

constexpr int kMaxRank = 4;

/// Dense element of S^(x)n or S'^(x)n. Component (b_1..b_n), b_k in {1,2},
/// is stored at bit index with slot k in bit k-1 (bit value b_k - 1).
struct SpinorTensor {
    Side side = Side::Column;
    int rank = 1;
    std::vector<GaussianRational> data;

    SpinorTensor() : data(2) {}
    SpinorTensor(Side s, int n);
    static SpinorTensor basis(Side s, int n, unsigned idx);

    size_t size() const { return data.size(); }
    bool is_zero() const;

    SpinorTensor operator-() const;
    friend SpinorTensor operator+(const SpinorTensor& a, const SpinorTensor& b);
    friend SpinorTensor operator-(const SpinorTensor& a, const SpinorTensor& b);
    friend SpinorTensor operator*(const GaussianRational& c, const SpinorTensor& a);
    friend bool operator==(const SpinorTensor& a, const SpinorTensor& b);
    friend bool operator!=(const SpinorTensor& a, const SpinorTensor& b) { return !(a == b); }
};

/// Apply the 2x2 matrix A at slot k only (left on columns, right on rows).
SpinorTensor slot_apply(const Biquaternion& a, int k, const SpinorTensor& t);

/// Exact projection onto the symmetric subspace (average over all n!
/// slot permutations).
SpinorTensor symmetrize(const SpinorTensor& t);

bool is_symmetric(const SpinorTensor& t);

/// Full contraction of a row tensor against a column tensor of equal rank.
GaussianRational contract(const SpinorTensor& t_row, const SpinorTensor& t_col);

/// Sum_i slot(e_i, j) slot(e_i, k) t; vanishes on symmetric tensors.
SpinorTensor casimir_slot_sum(const SpinorTensor& t, int j, int k);

/// 2x2 matrix with LaurentFn entries; used for variable-coefficient slot
/// factors such as Z, CZ, ZCZ in the conformal actions.
struct Mat2L {
    LaurentFn m11, m12, m21, m22;

    static Mat2L from_biquat(const Biquaternion& a);
    /// The coordinate matrix Z itself.
    static Mat2L z_matrix();
    const LaurentFn& at(int i, int j) const;

    friend Mat2L operator*(const Mat2L& a, const Mat2L& b);
};

/// Function H_C -> S^(x)n or S'^(x)n, componentwise Laurent.
struct TensorFn {
    Side side = Side::Column;
    int rank = 1;
    std::vector<LaurentFn> components;

    TensorFn() : components(2) {}
    TensorFn(Side s, int n);
    static TensorFn zero(Side s, int n) { return TensorFn(s, n); }

    size_t size() const { return components.size(); }
    bool is_zero() const;

    TensorFn operator-() const;
    friend TensorFn operator+(const TensorFn& a, const TensorFn& b);
    friend TensorFn operator-(const TensorFn& a, const TensorFn& b);
    friend TensorFn operator*(const GaussianRational& c, const TensorFn& a);
    friend TensorFn operator*(const LaurentFn& c, const TensorFn& a);
    friend bool operator==(const TensorFn& a, const TensorFn& b);
    friend bool operator!=(const TensorFn& a, const TensorFn& b) { return !(a == b); }
    TensorFn& operator+=(const TensorFn& o) { return *this = *this + o; }

    SpinorTensor evaluate(const Biquaternion& z) const;
    std::string canonical_string() const;
};

/// Apply a matrix of functions at slot k (side taken from the tensor).
TensorFn slot_apply(const Mat2L& a, int k, const TensorFn& f);
TensorFn slot_apply(const Biquaternion& a, int k, const TensorFn& f);

TensorFn symmetrize(const TensorFn& f);
bool is_symmetric_valued(const TensorFn& f);

/// Componentwise homogeneous splitting; a rank-n function is homogeneous
/// of degree d iff all components are.
std::map<int, TensorFn> homogeneous_split(const TensorFn& f);
bool is_homogeneous(const TensorFn& f, int* degree = nullptr);

/// Argument substitutions lifted componentwise.
TensorFn substitute_linear(const TensorFn& f, const std::array<std::array<GaussianRational, 4>, 4>& L,
                           const GaussianRational& n_factor);
TensorFn substitute_inverse_arg(const TensorFn& f);
TensorFn substitute_translate_arg(const TensorFn& f, const Biquaternion& b);

/// The sigma conjugation f -> f^+(Z*): conjugate coefficients, swap the
/// tensor side (transpose), precompose with the conjugate-transpose
/// argument. Anti-linear involution.
TensorFn conj_dagger(const TensorFn& f);

namespace detail {
/// Permute the slot bits of a multi-index: result bit p = idx bit perm[p].
unsigned permute_bits(unsigned idx, const std::vector<int>& perm);
} // namespace detail

} // namespace nregular

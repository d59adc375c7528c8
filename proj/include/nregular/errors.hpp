#pragma once

#include <stdexcept>
#include <string>

namespace nregular {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion of a null-cone element N(Z) = 0.
struct NonInvertibleError : Error {
    explicit NonInvertibleError(const std::string& what = "element has zero norm") : Error(what) {}
};

/// Evaluation of N(Z)^{-k}, k > 0, at a point with N(Z) = 0.
struct PoleAtNullConeError : Error {
    explicit PoleAtNullConeError(const std::string& what = "evaluation on the null cone") : Error(what) {}
};

/// (deg+m)^{-1} applied to a function with a homogeneous piece of degree -m.
struct ResonantDegreeError : Error {
    explicit ResonantDegreeError(const std::string& what = "resonant homogeneity degree") : Error(what) {}
};

/// Kernel expansion truncated below the degree of the integrand.
struct TruncationInsufficientError : Error {
    explicit TruncationInsufficientError(const std::string& what = "expansion truncation too low") : Error(what) {}
};

struct SlotRangeError : Error {
    explicit SlotRangeError(const std::string& what = "tensor slot out of range") : Error(what) {}
};

struct RankMismatchError : Error {
    explicit RankMismatchError(const std::string& what = "tensor rank mismatch") : Error(what) {}
};

/// Operation defined only for polynomial (denominator-free) inputs.
struct NotPolynomialError : Error {
    explicit NotPolynomialError(const std::string& what = "input must be polynomial") : Error(what) {}
};

struct IndexRangeError : Error {
    explicit IndexRangeError(const std::string& what = "basis index out of range") : Error(what) {}
};

} // namespace nregular

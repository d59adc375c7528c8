#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace nregular {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(const mpq_class& r) : re(r), im(0) { re.canonicalize(); }
    GaussianRational(const mpq_class& r, const mpq_class& i) : re(r), im(i) {
        re.canonicalize();
        im.canonicalize();
    }
    GaussianRational(long rn, long rd) : re(rn, rd), im(0) { re.canonicalize(); }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// re^2 + im^2, the multiplicative norm to Q.
    mpq_class norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re; im += o.im; return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re; im -= o.im; return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        mpq_class n = o.norm();
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        mpq_class r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        mpq_class n = norm();
        if (n == 0) throw std::domain_error("GaussianRational: inverse of zero");
        return {re / n, -im / n};
    }

    double to_double_re() const { return re.get_d(); }
    double to_double_im() const { return im.get_d(); }

    /// Canonical string form: "p/q", "p/q*i" or "p/q+r/s*i" (denominator 1 omitted).
    std::string str() const {
        auto rat = [](const mpq_class& q) {
            std::string s = q.get_num().get_str();
            if (q.get_den() != 1) s += "/" + q.get_den().get_str();
            return s;
        };
        if (im == 0) return rat(re);
        std::string si = rat(im) + "*i";
        if (re == 0) return si;
        return rat(re) + (im > 0 ? "+" : "") + si;
    }
};

} // namespace nregular

#include "nregular/laurent.hpp"

#include <sstream>

namespace nregular {

namespace {

int abs_degree(const Expo& e) { return e[0] + e[1] + e[2] + e[3]; }

using TermMap = std::map<Expo, GaussianRational>;

void add_into(TermMap& m, const Expo& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

TermMap mul_maps(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            add_into(out, e, ca * cb);
        }
    return out;
}

// N(Z) = z11 z22 - z12 z21 as a raw term map.
TermMap norm_map() {
    TermMap n;
    n[{1, 0, 0, 1}] = GaussianRational(1);
    n[{0, 1, 1, 0}] = GaussianRational(-1);
    return n;
}

// Multivariate division by N with leading term z11 z22 under lex order.
// Returns {quotient, remainder}; remainder empty iff divisible.
std::pair<TermMap, TermMap> divide_by_norm(TermMap work) {
    TermMap q, r;
    while (!work.empty()) {
        auto lt = *work.rbegin();
        const Expo& e = lt.first;
        if (e[0] >= 1 && e[3] >= 1) {
            Expo qe{e[0] - 1, e[1], e[2], e[3] - 1};
            add_into(q, qe, lt.second);
            // subtract lt.second * z^qe * (z11 z22 - z12 z21)
            add_into(work, e, -lt.second);
            add_into(work, Expo{qe[0], qe[1] + 1, qe[2] + 1, qe[3]}, lt.second);
        } else {
            r.emplace(e, lt.second);
            work.erase(std::prev(work.end()));
        }
    }
    return {std::move(q), std::move(r)};
}

GaussianRational gr_pow(GaussianRational base, int n) {
    GaussianRational out(1);
    for (int k = 0; k < n; ++k) out *= base;
    return out;
}

} // namespace

// ---------------------------------------------------------------- XPoly

XPoly XPoly::constant(const GaussianRational& c) {
    XPoly p;
    if (!c.is_zero()) p.terms[{0, 0, 0, 0}] = c;
    return p;
}

XPoly XPoly::variable(int k) {
    XPoly p;
    Expo e{0, 0, 0, 0};
    e[static_cast<size_t>(k)] = 1;
    p.terms[e] = GaussianRational(1);
    return p;
}

void XPoly::add_term(const Expo& e, const GaussianRational& c) { add_into(terms, e, c); }

XPoly XPoly::operator-() const {
    XPoly out;
    for (const auto& [e, c] : terms) out.terms[e] = -c;
    return out;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    XPoly out = a;
    for (const auto& [e, c] : b.terms) add_into(out.terms, e, c);
    return out;
}

XPoly operator-(const XPoly& a, const XPoly& b) {
    XPoly out = a;
    for (const auto& [e, c] : b.terms) add_into(out.terms, e, -c);
    return out;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly out;
    out.terms = mul_maps(a.terms, b.terms);
    return out;
}

XPoly operator*(const GaussianRational& c, const XPoly& a) {
    XPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, cc] : a.terms) out.terms[e] = c * cc;
    return out;
}

XPoly XPoly::pow(int n) const {
    XPoly out = constant(GaussianRational(1));
    for (int k = 0; k < n; ++k) out = out * *this;
    return out;
}

XPoly XPoly::partial(int k) const {
    XPoly out;
    for (const auto& [e, c] : terms) {
        int p = e[static_cast<size_t>(k)];
        if (p == 0) continue;
        Expo de = e;
        de[static_cast<size_t>(k)] = p - 1;
        add_into(out.terms, de, GaussianRational(p) * c);
    }
    return out;
}

GaussianRational XPoly::evaluate(const std::array<GaussianRational, 4>& x) const {
    GaussianRational out;
    for (const auto& [e, c] : terms) {
        GaussianRational t = c;
        for (int v = 0; v < 4; ++v)
            t *= gr_pow(x[static_cast<size_t>(v)], e[static_cast<size_t>(v)]);
        out += t;
    }
    return out;
}

// ------------------------------------------------------------- LaurentFn

LaurentFn LaurentFn::constant(const GaussianRational& c) {
    LaurentFn f;
    if (!c.is_zero()) f.numerator_[{0, 0, 0, 0}] = c;
    return f;
}

LaurentFn LaurentFn::coordinate(int i, int j) {
    LaurentFn f;
    Expo e{0, 0, 0, 0};
    e[static_cast<size_t>((i - 1) * 2 + (j - 1))] = 1;
    f.numerator_[e] = GaussianRational(1);
    return f;
}

LaurentFn LaurentFn::norm_poly() {
    LaurentFn f;
    f.numerator_ = norm_map();
    return f;
}

LaurentFn LaurentFn::norm_inverse(int k) {
    LaurentFn f;
    f.numerator_[{0, 0, 0, 0}] = GaussianRational(1);
    f.denom_pow_ = k;
    return f;
}

LaurentFn LaurentFn::term(const Expo& e, const GaussianRational& c, int k) {
    LaurentFn f;
    if (!c.is_zero()) f.numerator_[e] = c;
    f.denom_pow_ = k;
    f.canonicalize();
    return f;
}

void LaurentFn::canonicalize() {
    for (auto it = numerator_.begin(); it != numerator_.end();)
        it = it->second.is_zero() ? numerator_.erase(it) : std::next(it);
    if (numerator_.empty()) {
        denom_pow_ = 0;
        return;
    }
    while (denom_pow_ > 0) {
        auto [q, r] = divide_by_norm(numerator_);
        if (!r.empty()) break;
        numerator_ = std::move(q);
        --denom_pow_;
    }
}

LaurentFn LaurentFn::operator-() const {
    LaurentFn out;
    out.denom_pow_ = denom_pow_;
    for (const auto& [e, c] : numerator_) out.numerator_[e] = -c;
    return out;
}

LaurentFn operator+(const LaurentFn& a, const LaurentFn& b) {
    LaurentFn out;
    int k = std::max(a.denom_pow_, b.denom_pow_);
    auto lift = [&](const LaurentFn& f) {
        TermMap m = f.numerator_;
        for (int j = f.denom_pow_; j < k; ++j) m = mul_maps(m, norm_map());
        return m;
    };
    out.numerator_ = lift(a);
    for (const auto& [e, c] : lift(b)) add_into(out.numerator_, e, c);
    out.denom_pow_ = k;
    out.canonicalize();
    return out;
}

LaurentFn operator-(const LaurentFn& a, const LaurentFn& b) { return a + (-b); }

LaurentFn operator*(const LaurentFn& a, const LaurentFn& b) {
    LaurentFn out;
    out.numerator_ = mul_maps(a.numerator_, b.numerator_);
    out.denom_pow_ = a.denom_pow_ + b.denom_pow_;
    out.canonicalize();
    return out;
}

LaurentFn operator*(const GaussianRational& c, const LaurentFn& a) {
    LaurentFn out;
    if (c.is_zero()) return out;
    out.denom_pow_ = a.denom_pow_;
    for (const auto& [e, cc] : a.numerator_) out.numerator_[e] = c * cc;
    return out;
}

bool operator==(const LaurentFn& a, const LaurentFn& b) {
    return a.denom_pow_ == b.denom_pow_ && a.numerator_ == b.numerator_;
}

LaurentFn LaurentFn::partial(int i, int j) const {
    int v = (i - 1) * 2 + (j - 1);
    TermMap dp;
    for (const auto& [e, c] : numerator_) {
        int p = e[static_cast<size_t>(v)];
        if (p == 0) continue;
        Expo de = e;
        de[static_cast<size_t>(v)] = p - 1;
        add_into(dp, de, GaussianRational(p) * c);
    }
    LaurentFn out;
    if (denom_pow_ == 0) {
        out.numerator_ = std::move(dp);
        out.canonicalize();
        return out;
    }
    // d(P N^-k) = (dP * N - k P dN) N^-(k+1)
    static const Expo dn_exp[4] = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    static const int dn_sign[4] = {1, -1, -1, 1};
    TermMap dn;
    dn[dn_exp[v]] = GaussianRational(dn_sign[v]);
    TermMap res = mul_maps(dp, norm_map());
    GaussianRational mk(-denom_pow_);
    for (const auto& [e, c] : mul_maps(numerator_, dn)) add_into(res, e, mk * c);
    out.numerator_ = std::move(res);
    out.denom_pow_ = denom_pow_ + 1;
    out.canonicalize();
    return out;
}

GaussianRational LaurentFn::evaluate(const Biquaternion& z) const {
    std::array<GaussianRational, 4> v{z.z11, z.z12, z.z21, z.z22};
    GaussianRational num;
    for (const auto& [e, c] : numerator_) {
        GaussianRational t = c;
        for (int k = 0; k < 4; ++k) t *= gr_pow(v[static_cast<size_t>(k)], e[static_cast<size_t>(k)]);
        num += t;
    }
    if (denom_pow_ == 0) return num;
    GaussianRational n = norm(z);
    if (n.is_zero()) throw PoleAtNullConeError();
    return num * gr_pow(n.inverse(), denom_pow_);
}

std::complex<double> LaurentFn::evaluate_double(const std::array<std::complex<double>, 4>& z) const {
    std::complex<double> num = 0;
    for (const auto& [e, c] : numerator_) {
        std::complex<double> t(c.to_double_re(), c.to_double_im());
        for (int k = 0; k < 4; ++k)
            for (int p = 0; p < e[static_cast<size_t>(k)]; ++p) t *= z[static_cast<size_t>(k)];
        num += t;
    }
    std::complex<double> n = z[0] * z[3] - z[1] * z[2];
    for (int p = 0; p < denom_pow_; ++p) num /= n;
    return num;
}

std::map<int, LaurentFn> LaurentFn::homogeneous_split() const {
    std::map<int, LaurentFn> out;
    for (const auto& [e, c] : numerator_) {
        int d = abs_degree(e) - 2 * denom_pow_;
        auto& piece = out[d];
        piece.numerator_[e] = c;
        piece.denom_pow_ = denom_pow_;
    }
    for (auto& [d, piece] : out) piece.canonicalize();
    return out;
}

bool LaurentFn::is_homogeneous(int* degree) const {
    if (numerator_.empty()) {
        if (degree) *degree = 0;
        return true;
    }
    int d = abs_degree(numerator_.begin()->first) - 2 * denom_pow_;
    for (const auto& [e, c] : numerator_)
        if (abs_degree(e) - 2 * denom_pow_ != d) return false;
    if (degree) *degree = d;
    return true;
}

LaurentFn LaurentFn::substitute_linear(const std::array<std::array<GaussianRational, 4>, 4>& L,
                                       const GaussianRational& n_factor) const {
    std::array<TermMap, 4> lin;
    for (size_t v = 0; v < 4; ++v)
        for (size_t w = 0; w < 4; ++w)
            if (!L[v][w].is_zero()) {
                Expo e{0, 0, 0, 0};
                e[w] = 1;
                lin[v][e] = L[v][w];
            }
    GaussianRational scale = gr_pow(n_factor.inverse(), denom_pow_);
    LaurentFn out;
    out.denom_pow_ = denom_pow_;
    for (const auto& [e, c] : numerator_) {
        TermMap t;
        t[{0, 0, 0, 0}] = c * scale;
        for (size_t v = 0; v < 4; ++v)
            for (int p = 0; p < e[v]; ++p) t = mul_maps(t, lin[v]);
        for (const auto& [te, tc] : t) add_into(out.numerator_, te, tc);
    }
    out.canonicalize();
    return out;
}

LaurentFn LaurentFn::substitute_inverse() const {
    LaurentFn out;
    for (const auto& [e, c] : numerator_) {
        // z11 -> z22/N, z12 -> -z12/N, z21 -> -z21/N, z22 -> z11/N
        Expo ne{e[3], e[1], e[2], e[0]};
        GaussianRational nc = ((e[1] + e[2]) % 2 != 0) ? -c : c;
        int npow = abs_degree(e) - denom_pow_;
        LaurentFn t;
        if (npow <= 0) {
            t.numerator_[ne] = nc;
            for (int j = 0; j < -npow; ++j) t.numerator_ = mul_maps(t.numerator_, norm_map());
        } else {
            t.numerator_[ne] = nc;
            t.denom_pow_ = npow;
        }
        out += t;
    }
    return out;
}

LaurentFn LaurentFn::substitute_translate(const Biquaternion& b) const {
    if (denom_pow_ != 0) throw NotPolynomialError("translation requires polynomial input");
    std::array<GaussianRational, 4> bb{b.z11, b.z12, b.z21, b.z22};
    LaurentFn out;
    for (const auto& [e, c] : numerator_) {
        TermMap t;
        t[{0, 0, 0, 0}] = c;
        for (size_t v = 0; v < 4; ++v) {
            TermMap shifted;
            Expo ev{0, 0, 0, 0};
            ev[v] = 1;
            shifted[ev] = GaussianRational(1);
            add_into(shifted, {0, 0, 0, 0}, bb[v]);
            for (int p = 0; p < e[v]; ++p) t = mul_maps(t, shifted);
        }
        for (const auto& [te, tc] : t) add_into(out.numerator_, te, tc);
    }
    out.canonicalize();
    return out;
}

LaurentFn LaurentFn::sphere_conjugate() const {
    LaurentFn out;
    out.denom_pow_ = denom_pow_;
    for (const auto& [e, c] : numerator_) {
        Expo ne{e[3], e[2], e[1], e[0]};
        GaussianRational nc = c.conj();
        if ((e[1] + e[2]) % 2 != 0) nc = -nc;
        add_into(out.numerator_, ne, nc);
    }
    out.canonicalize();
    return out;
}

LaurentFn LaurentFn::conj_transpose_arg() const {
    LaurentFn out;
    out.denom_pow_ = denom_pow_;
    for (const auto& [e, c] : numerator_) {
        Expo ne{e[0], e[2], e[1], e[3]};
        add_into(out.numerator_, ne, c.conj());
    }
    out.canonicalize();
    return out;
}

XPoly entry_dictionary(int i, int j) {
    const GaussianRational one(1), mi(mpq_class(0), mpq_class(-1));
    XPoly x0 = XPoly::variable(0), x1 = XPoly::variable(1);
    XPoly x2 = XPoly::variable(2), x3 = XPoly::variable(3);
    if (i == 1 && j == 1) return x0 + mi * x3;
    if (i == 1 && j == 2) return -x2 + mi * x1;
    if (i == 2 && j == 1) return x2 + mi * x1;
    return x0 + (-mi) * x3;
}

XPoly LaurentFn::to_real_sphere_poly() const {
    static const std::array<XPoly, 4> dict = {entry_dictionary(1, 1), entry_dictionary(1, 2),
                                              entry_dictionary(2, 1), entry_dictionary(2, 2)};
    XPoly out;
    for (const auto& [e, c] : numerator_) {
        XPoly t = XPoly::constant(c);
        for (size_t v = 0; v < 4; ++v)
            for (int p = 0; p < e[v]; ++p) t = t * dict[v];
        out = out + t;
    }
    return out;
}

XPoly LaurentFn::to_x_poly() const {
    if (denom_pow_ != 0) throw NotPolynomialError("x-form requires polynomial input");
    return to_real_sphere_poly();
}

LaurentFn x_poly_to_laurent(const XPoly& p) {
    const GaussianRational half(1, 2);
    const GaussianRational half_i = half * GaussianRational::i();
    const LaurentFn z11 = LaurentFn::coordinate(1, 1), z12 = LaurentFn::coordinate(1, 2);
    const LaurentFn z21 = LaurentFn::coordinate(2, 1), z22 = LaurentFn::coordinate(2, 2);
    const std::array<LaurentFn, 4> inv = {
        half * (z11 + z22), half_i * (z12 + z21), half * (z21 - z12), half_i * (z11 - z22)};
    LaurentFn out;
    for (const auto& [e, c] : p.terms) {
        LaurentFn t = LaurentFn::constant(c);
        for (size_t v = 0; v < 4; ++v)
            for (int k = 0; k < e[v]; ++k) t = t * inv[v];
        out += t;
    }
    return out;
}

std::string LaurentFn::canonical_string() const {
    std::ostringstream os;
    os << "{\"denom_pow\":" << denom_pow_ << ",\"terms\":{";
    bool first = true;
    for (const auto& [e, c] : numerator_) {
        if (!first) os << ",";
        first = false;
        os << "\"" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "\":\"" << c.str() << "\"";
    }
    os << "}}";
    return os.str();
}

} // namespace nregular

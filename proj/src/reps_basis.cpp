#include "nregular/reps_basis.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

namespace nregular {

namespace {

GaussianRational binom(int n, int k) {
    if (k < 0 || k > n) return GaussianRational();
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return GaussianRational(mpq_class(b));
}

// (a)! / (b)! for 0 <= a <= b, as an exact rational.
GaussianRational factorial_ratio(int a, int b) {
    mpz_class denom = 1;
    for (int k = a + 1; k <= b; ++k) denom *= k;
    mpq_class q(1, denom);
    q.canonicalize();
    return GaussianRational(q);
}

// Apply partial d_{i(b_k) j(b_k)} per slot bit to a scalar, building a
// rank-n tensor function; chooser maps the slot bit (0 or 1) to (i,j).
template <typename Chooser>
TensorFn derive_tensor(Side side, int n, const LaurentFn& t, Chooser choose) {
    TensorFn out(side, n);
    for (unsigned idx = 0; idx < out.components.size(); ++idx) {
        LaurentFn f = t;
        for (int k = 0; k < n && !f.is_zero(); ++k) {
            auto [i, j] = choose((idx >> k) & 1u);
            f = f.partial(i, j);
        }
        out.components[idx] = f;
    }
    return out;
}

} // namespace

std::string HalfInt::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

bool BasisIndex::valid() const {
    if (n < 1 || n > kMaxRank || l.twice < 0) return false;
    if (std::abs(nu.twice) > l.twice || std::abs(mu.twice) > l.twice + n) return false;
    // parity: 2mu = 2l + n (mod 2), 2nu = 2l (mod 2)
    if ((mu.twice - l.twice - n) % 2 != 0) return false;
    if ((nu.twice - l.twice) % 2 != 0) return false;
    return true;
}

std::string BasisIndex::str() const {
    static const char* names[] = {"F", "G", "F'", "G'"};
    std::ostringstream os;
    os << names[static_cast<int>(family)] << "^(" << n << ")_{" << l.str() << "," << mu.str()
       << "," << nu.str() << "}";
    return os.str();
}

LaurentFn t_coeff(HalfInt l, HalfInt nu, HalfInt mu) {
    const int L = l.twice, V = nu.twice, M = mu.twice;
    if (L < 0 || std::abs(V) > L || std::abs(M) > L) return LaurentFn::zero();
    if ((L - V) % 2 != 0 || (L - M) % 2 != 0) return LaurentFn::zero();

    static std::map<std::tuple<int, int, int>, LaurentFn> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(L, V, M);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int s = (L - V) / 2;       // p + q
    const int a = (L - M) / 2;       // exponent budget of (s z11 + z21)
    const int b = (L + M) / 2;       // exponent budget of (s z12 + z22)
    LaurentFn t;
    for (int p = std::max(0, s - b); p <= std::min(a, s); ++p) {
        int q = s - p;
        t += LaurentFn::term({p, q, a - p, b - q}, binom(a, p) * binom(b, q));
    }
    cache.emplace(key, t);
    return t;
}

LaurentFn t_coeff_inverted(HalfInt l, HalfInt nu, HalfInt mu) {
    return LaurentFn::norm_inverse(1) * t_coeff(l, nu, mu).substitute_inverse();
}

TensorFn F_basis(int n, HalfInt l, HalfInt mu, HalfInt nu) {
    LaurentFn t = t_coeff(l + HalfInt(n), nu - HalfInt(n), mu);
    return derive_tensor(Side::Column, n, t,
                         [](unsigned bit) { return std::pair<int, int>(1, bit ? 2 : 1); });
}

TensorFn F_basis_alt(int n, HalfInt l, HalfInt mu, HalfInt nu) {
    LaurentFn t = t_coeff(l + HalfInt(n), nu + HalfInt(n), mu);
    return derive_tensor(Side::Column, n, t,
                         [](unsigned bit) { return std::pair<int, int>(2, bit ? 2 : 1); });
}

TensorFn G_basis(int n, HalfInt l, HalfInt mu, HalfInt nu) {
    LaurentFn t = t_coeff(l + HalfInt(n), mu, nu - HalfInt(n));
    int lv = (l - nu).twice / 2; // l - nu, an integer
    GaussianRational pref = factorial_ratio(lv, lv + n);
    TensorFn g = derive_tensor(Side::Row, n, t,
                               [](unsigned bit) { return std::pair<int, int>(bit ? 2 : 1, 1); });
    return pref * g;
}

TensorFn Fp_basis(int n, HalfInt l, HalfInt mu, HalfInt nu) {
    if (n == 1) {
        TensorFn out(Side::Column, 1);
        GaussianRational cm(mpq_class((l - nu).twice + 2, 2)); // l - nu + 1
        GaussianRational cp(mpq_class((l + nu).twice + 2, 2)); // l + nu + 1
        out.components[0] = cm * t_coeff_inverted(l + HalfInt(1), nu - HalfInt(1), mu);
        out.components[1] = cp * t_coeff_inverted(l + HalfInt(1), nu + HalfInt(1), mu);
        return out;
    }
    // prepend a slot via the recursion; pick whichever source index is in range
    TensorFn out(Side::Column, n);
    BasisIndex up{Family::Fp, n - 1, l, mu + HalfInt(1), nu};
    bool use_up = up.valid();
    TensorFn prev = Fp_basis(n - 1, l, use_up ? mu + HalfInt(1) : mu - HalfInt(1), nu);
    int row_i = use_up ? 1 : 2;
    for (unsigned idx = 0; idx < prev.components.size(); ++idx) {
        for (unsigned b0 = 0; b0 < 2; ++b0) {
            unsigned nidx = (idx << 1) | b0;
            out.components[nidx] = -prev.components[idx].partial(row_i, static_cast<int>(b0) + 1);
        }
    }
    return out;
}

TensorFn Gp_basis(int n, HalfInt l, HalfInt mu, HalfInt nu) {
    if (n == 1) {
        TensorFn out(Side::Row, 1);
        out.components[0] = t_coeff_inverted(l + HalfInt(1), mu, nu - HalfInt(1));
        out.components[1] = t_coeff_inverted(l + HalfInt(1), mu, nu + HalfInt(1));
        return out;
    }
    TensorFn out(Side::Row, n);
    TensorFn lo = Gp_basis(n - 1, l + HalfInt(1), mu, nu - HalfInt(1));
    TensorFn hi = Gp_basis(n - 1, l + HalfInt(1), mu, nu + HalfInt(1));
    for (unsigned idx = 0; idx < lo.components.size(); ++idx) {
        out.components[idx << 1] = lo.components[idx];
        out.components[(idx << 1) | 1u] = hi.components[idx];
    }
    return out;
}

TensorFn basis_fn(const BasisIndex& idx) {
    if (!idx.valid()) throw IndexRangeError("invalid basis index " + idx.str());
    switch (idx.family) {
        case Family::F: return F_basis(idx.n, idx.l, idx.mu, idx.nu);
        case Family::G: return G_basis(idx.n, idx.l, idx.mu, idx.nu);
        case Family::Fp: return Fp_basis(idx.n, idx.l, idx.mu, idx.nu);
        case Family::Gp: return Gp_basis(idx.n, idx.l, idx.mu, idx.nu);
    }
    throw IndexRangeError();
}

std::vector<BasisIndex> enumerate_indices(Family fam, int n, HalfInt l) {
    std::vector<BasisIndex> out;
    for (int m = -(l.twice + n); m <= l.twice + n; m += 2)
        for (int v = -l.twice; v <= l.twice; v += 2)
            out.push_back(BasisIndex{fam, n, l, HalfInt(m), HalfInt(v)});
    return out;
}

std::vector<HalfInt> l_values(HalfInt l_max) {
    std::vector<HalfInt> out;
    for (int t = 0; t <= l_max.twice; ++t) out.push_back(HalfInt(t));
    return out;
}

} // namespace nregular

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nregular/diff_ops.hpp"
#include "nregular/reps_basis.hpp"

using namespace nregular;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(n, d); }
} // namespace

TEST_CASE("half integers") {
    CHECK(HalfInt(3).str() == "3/2");
    CHECK(HalfInt(4).str() == "2");
    CHECK(HalfInt(-1).str() == "-1/2");
    CHECK(HalfInt(1) + HalfInt(1) == HalfInt::of_int(1));
    CHECK(HalfInt(3) - HalfInt(1) == HalfInt(2));
    CHECK(HalfInt(1) < HalfInt(2));
}

TEST_CASE("matrix coefficients") {
    CHECK(t_coeff(HalfInt(0), HalfInt(0), HalfInt(0)) == LaurentFn::one());
    CHECK(t_coeff(HalfInt(1), HalfInt(-1), HalfInt(-1)) == LaurentFn::coordinate(1, 1));
    CHECK(t_coeff(HalfInt(1), HalfInt(-1), HalfInt(1)) == LaurentFn::coordinate(1, 2));
    CHECK(t_coeff(HalfInt(1), HalfInt(1), HalfInt(-1)) == LaurentFn::coordinate(2, 1));
    CHECK(t_coeff(HalfInt(1), HalfInt(1), HalfInt(1)) == LaurentFn::coordinate(2, 2));
    CHECK(t_coeff(HalfInt(2), HalfInt(0), HalfInt(0)) ==
          LaurentFn::term({1, 0, 0, 1}, q(1)) + LaurentFn::term({0, 1, 1, 0}, q(1)));
    // out of range or wrong parity: zero
    CHECK(t_coeff(HalfInt(1), HalfInt(3), HalfInt(1)).is_zero());
    CHECK(t_coeff(HalfInt(2), HalfInt(1), HalfInt(0)).is_zero());
    // multiplicativity at a point: t^l(ZW) = sum_k t^l_{nu k}(Z) t^l_{k mu}(W)
    Biquaternion Z(q(1), q(2), q(0), q(1)), W(q(3), q(1), q(1), q(1));
    for (int v = -2; v <= 2; v += 2)
        for (int m = -2; m <= 2; m += 2) {
            GaussianRational lhs = t_coeff(HalfInt(2), HalfInt(v), HalfInt(m)).evaluate(Z * W);
            GaussianRational rhs;
            for (int k = -2; k <= 2; k += 2)
                rhs += t_coeff(HalfInt(2), HalfInt(v), HalfInt(k)).evaluate(Z) *
                       t_coeff(HalfInt(2), HalfInt(k), HalfInt(m)).evaluate(W);
            CHECK(lhs == rhs);
        }
    // identity matrix gives the delta
    CHECK(t_coeff(HalfInt(3), HalfInt(1), HalfInt(1)).evaluate(Biquaternion::one()) == q(1));
    CHECK(t_coeff(HalfInt(3), HalfInt(1), HalfInt(-1)).evaluate(Biquaternion::one()) == q(0));
}

TEST_CASE("index enumeration") {
    for (int n = 1; n <= 3; ++n)
        for (int lt = 0; lt <= 3; ++lt) {
            auto idx = enumerate_indices(Family::F, n, HalfInt(lt));
            CHECK(idx.size() == static_cast<size_t>((lt + 1) * (lt + n + 1)));
            for (const auto& bi : idx) {
                CHECK(bi.valid());
                CHECK((bi.mu.twice - lt - n) % 2 == 0);
                CHECK((bi.nu.twice - lt) % 2 == 0);
                CHECK(std::abs(bi.nu.twice) <= lt);
                CHECK(std::abs(bi.mu.twice) <= lt + n);
            }
        }
    BasisIndex bad{Family::F, 1, HalfInt(0), HalfInt(0), HalfInt(0)}; // parity of mu wrong
    CHECK_FALSE(bad.valid());
    CHECK_THROWS_AS(basis_fn(bad), IndexRangeError);
}

TEST_CASE("families are regular and graded") {
    for (int n = 1; n <= 2; ++n)
        for (int lt = 0; lt <= 2; ++lt)
            for (Family fam : {Family::F, Family::G, Family::Fp, Family::Gp})
                for (const auto& bi : enumerate_indices(fam, n, HalfInt(lt))) {
                    TensorFn v = basis_fn(bi);
                    CHECK_FALSE(v.is_zero());
                    CHECK(is_n_regular(v));
                    CHECK(is_symmetric_valued(v));
                    int d = 0;
                    CHECK(is_homogeneous(v, &d));
                    bool plain = fam == Family::F || fam == Family::G;
                    CHECK(d == (plain ? lt : -(lt + n + 2)));
                    CHECK(v.side == ((fam == Family::F || fam == Family::Fp) ? Side::Column
                                                                             : Side::Row));
                }
}

TEST_CASE("the two displayed F forms agree") {
    for (int n = 1; n <= 3; ++n)
        for (int lt = 0; lt <= 2; ++lt)
            for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(lt)))
                CHECK(F_basis(bi.n, bi.l, bi.mu, bi.nu) == F_basis_alt(bi.n, bi.l, bi.mu, bi.nu));
}

TEST_CASE("rank-1 closed forms") {
    // F at l = 1/2: coefficients (l -+ mu + 1/2)
    TensorFn f = F_basis(1, HalfInt(1), HalfInt(0), HalfInt(1));
    CHECK(f.components[0] == t_coeff(HalfInt(1), HalfInt(1), HalfInt(1)));
    CHECK(f.components[1] == t_coeff(HalfInt(1), HalfInt(1), HalfInt(-1)));
    // F' at l = 0: decaying column with unit coefficients (l -+ nu + 1)
    TensorFn fp = Fp_basis(1, HalfInt(0), HalfInt(1), HalfInt(0));
    CHECK(fp.components[0] == q(1) * t_coeff_inverted(HalfInt(1), HalfInt(-1), HalfInt(1)));
    CHECK(fp.components[1] == q(1) * t_coeff_inverted(HalfInt(1), HalfInt(1), HalfInt(1)));
    CHECK(is_n_regular(fp));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nregular/kernel_pairing.hpp"

using namespace nregular;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(n, d); }
} // namespace

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(0, 0, 0, 0) == 1);
    CHECK(sphere_moment(2, 0, 0, 0) == mpq_class(1, 4));
    CHECK(sphere_moment(0, 0, 2, 0) == mpq_class(1, 4));
    CHECK(sphere_moment(4, 0, 0, 0) == mpq_class(1, 8));
    CHECK(sphere_moment(2, 2, 0, 0) == mpq_class(1, 24));
    CHECK(sphere_moment(2, 2, 2, 2) == mpq_class(1, 1920));
    CHECK(sphere_moment(1, 0, 0, 0) == 0);
    CHECK(sphere_moment(3, 2, 1, 0) == 0);
    // entry-monomial route
    CHECK(sphere_moment_z(0, 0, 0, 0) == 1);
    CHECK(sphere_moment_z(1, 0, 0, 1) == mpq_class(1, 2));
    CHECK(sphere_moment_z(0, 1, 1, 0) == mpq_class(-1, 2));
    CHECK(sphere_moment_z(1, 1, 1, 1) == mpq_class(-1, 6));
    CHECK(sphere_moment_z(1, 0, 0, 0) == 0);
    CHECK(sphere_moment_z(2, 0, 0, 1) == 0);
    // cross-check the two integration routes on mixed integrands
    LaurentFn f = LaurentFn::coordinate(1, 1) * LaurentFn::coordinate(2, 2) +
                  GaussianRational::i() * LaurentFn::coordinate(1, 2) * LaurentFn::coordinate(2, 1);
    CHECK(integrate_S3(f) == integrate_S3_via_x(f));
    CHECK(integrate_S3(f) == q(1, 2) - GaussianRational::i() * q(1, 2));
}

TEST_CASE("kernel closed form at rank 1") {
    KernelFn k = kernel(1);
    LaurentFn n2 = LaurentFn::norm_inverse(2);
    CHECK(k.comps[0][0] == LaurentFn::coordinate(2, 2) * n2);
    CHECK(k.comps[0][1] == -(LaurentFn::coordinate(1, 2) * n2));
    CHECK(k.comps[1][0] == -(LaurentFn::coordinate(2, 1) * n2));
    CHECK(k.comps[1][1] == LaurentFn::coordinate(1, 1) * n2);
}

TEST_CASE("kernel symmetry across ranks") {
    for (int n = 1; n <= 3; ++n) {
        KernelFn k = kernel(n);
        size_t dim = 1u << n;
        REQUIRE(k.comps.size() == dim);
        // symmetric under simultaneous permutation of the paired slot indices:
        // swapping adjacent slots in both I and J fixes the kernel
        if (n >= 2)
            for (size_t I = 0; I < dim; ++I)
                for (size_t J = 0; J < dim; ++J) {
                    size_t Is = (I & ~3u) | ((I & 1u) << 1) | ((I >> 1) & 1u);
                    size_t Js = (J & ~3u) | ((J & 1u) << 1) | ((J >> 1) & 1u);
                    CHECK(k.comps[I][J] == k.comps[Is][Js]);
                }
    }
}

TEST_CASE("orthogonality spots") {
    for (int n = 1; n <= 2; ++n) {
        GaussianRational sgn(n % 2 ? 1 : -1);
        auto idx = enumerate_indices(Family::F, n, HalfInt(1));
        const BasisIndex& a = idx[0];
        const BasisIndex& b = idx[idx.size() - 1];
        auto with = [](BasisIndex i, Family f) {
            i.family = f;
            return i;
        };
        CHECK(bilinear_pairing(basis_fn(a), basis_fn(with(a, Family::Gp))) == q(1));
        CHECK(bilinear_pairing(basis_fn(a), basis_fn(with(b, Family::Gp))) == q(0));
        CHECK(bilinear_pairing(basis_fn(with(a, Family::Fp)), basis_fn(with(a, Family::G))) == sgn);
        CHECK(bilinear_pairing(basis_fn(a), basis_fn(with(a, Family::G))) == q(0));
        CHECK(bilinear_pairing(basis_fn(with(a, Family::Fp)), basis_fn(with(a, Family::Gp))) ==
              q(0));
    }
}

TEST_CASE("reproducing integral spots") {
    Biquaternion w = q(1, 3) * (Biquaternion::one() + Biquaternion::unit(3));
    Biquaternion far = q(2) * Biquaternion::unit(1);
    for (int n = 1; n <= 2; ++n) {
        TensorFn f = basis_fn(enumerate_indices(Family::F, n, HalfInt(2))[1]);
        CHECK(cauchy_fueter_apply(f, w, HalfInt(2)) == Dn(f, n).evaluate(w));
        CHECK(cauchy_fueter_apply(f, far, HalfInt(2)).is_zero());
    }
    TensorFn f = basis_fn(enumerate_indices(Family::F, 1, HalfInt(2))[0]);
    CHECK_THROWS_AS(cauchy_fueter_apply(f, w, HalfInt(0)), TruncationInsufficientError);
}

TEST_CASE("coefficient tables") {
    TensorFn f = basis_fn(enumerate_indices(Family::F, 2, HalfInt(1))[2]);
    TensorFn g = basis_fn(enumerate_indices(Family::Fp, 2, HalfInt(1))[1]);
    TensorFn h = q(3) * f + GaussianRational::i() * g;
    auto table = laurent_coefficients(h, HalfInt(2));
    CHECK(table.a.size() == 1);
    CHECK(table.b.size() == 1);
    CHECK(table.a.begin()->second == q(3));
    CHECK(reconstruct_from_coefficients(table, 2) == h);
}

TEST_CASE("inner product positivity spots") {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& bi : enumerate_indices(Family::F, n, HalfInt(1))) {
            GaussianRational p = inner_product_F(basis_fn(bi), basis_fn(bi));
            CHECK(p.is_real());
            CHECK(p.re > 0);
        }
        for (const auto& bi : enumerate_indices(Family::G, n, HalfInt(1))) {
            GaussianRational p = inner_product_G(basis_fn(bi), basis_fn(bi));
            CHECK(p.is_real());
            CHECK(p.re > 0);
        }
    }
}

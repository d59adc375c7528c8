#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nregular/diff_ops.hpp"
#include "nregular/kernel_pairing.hpp"
#include "nregular/lie_actions.hpp"

using namespace nregular;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(n, d); }
} // namespace

TEST_CASE("block generators") {
    CHECK(one_block_generators().size() == 16);
    CHECK(u22_generators().size() == 16);
}

TEST_CASE("algebra action degree steps") {
    TensorFn f = F_basis(1, HalfInt(2), HalfInt(1), HalfInt(0));
    int d = 0;
    REQUIRE(is_homogeneous(f, &d));
    REQUIRE(d == 2);
    // A and D blocks preserve degree, B lowers by one, C raises by one
    for (int k = 0; k < 4; ++k) {
        Biquaternion e = Biquaternion::unit(k);
        TensorFn fa = act_algebra(GlElement::a_block(e), f);
        if (!fa.is_zero()) CHECK((is_homogeneous(fa, &d) && d == 2));
        TensorFn fb = act_algebra(GlElement::b_block(e), f);
        if (!fb.is_zero()) CHECK((is_homogeneous(fb, &d) && d == 1));
        TensorFn fc = act_algebra(GlElement::c_block(e), f);
        if (!fc.is_zero()) CHECK((is_homogeneous(fc, &d) && d == 3));
        TensorFn fd = act_algebra(GlElement::d_block(e), f);
        if (!fd.is_zero()) CHECK((is_homogeneous(fd, &d) && d == 2));
    }
}

TEST_CASE("bracket homomorphism spot") {
    auto gens = one_block_generators();
    TensorFn f = F_basis(2, HalfInt(1), HalfInt(-1), HalfInt(1));
    REQUIRE_FALSE(f.is_zero());
    for (size_t a : {1u, 6u, 11u})
        for (size_t b : {2u, 7u, 12u}) {
            const GlElement& x = gens[a];
            const GlElement& y = gens[b];
            GlElement xy{x.A * y.A + x.B * y.C, x.A * y.B + x.B * y.D,
                         x.C * y.A + x.D * y.C, x.C * y.B + x.D * y.D};
            GlElement yx{y.A * x.A + y.B * x.C, y.A * x.B + y.B * x.D,
                         y.C * x.A + y.D * x.C, y.C * x.B + y.D * x.D};
            GlElement br{xy.A - yx.A, xy.B - yx.B, xy.C - yx.C, xy.D - yx.D};
            CHECK(act_algebra(br, f) ==
                  act_algebra(x, act_algebra(y, f)) - act_algebra(y, act_algebra(x, f)));
        }
}

TEST_CASE("group actions") {
    TensorFn f = F_basis(1, HalfInt(1), HalfInt(0), HalfInt(1));
    // diagonal action at the identity
    CHECK(act_diagonal(Biquaternion::one(), Biquaternion::one(), f) == f);
    // scaling: diag(c, 1) with c = 2 e0
    Biquaternion c2 = q(2) * Biquaternion::one();
    TensorFn sc = act_diagonal(c2, Biquaternion::one(), f);
    // degree-1 rank-1 member: the argument becomes Z/2 and the prefactor is trivial
    CHECK(sc == q(1, 2) * f);
    // inversion is an involution landing in the decaying space
    TensorFn inv = act_inversion(f);
    int d = 0;
    CHECK(is_n_regular(inv));
    CHECK((is_homogeneous(inv, &d) && d == -4));
    CHECK(act_inversion(inv) == f);
    // translation
    Biquaternion b(q(0), q(1), q(0), q(2));
    Biquaternion p(q(1), q(0), q(1), q(1));
    CHECK(act_translation(b, f).evaluate(p) == f.evaluate(p + b));
}

TEST_CASE("torus weight") {
    GaussianRational u(mpq_class(3, 5), mpq_class(4, 5));
    Biquaternion d(u, GaussianRational(), GaussianRational(), u.inverse());
    TensorFn v = F_basis(1, HalfInt(1), HalfInt(-2), HalfInt(-1));
    TensorFn w = act_diagonal(Biquaternion::one(), d, v);
    CHECK(w == u * u * v); // weight u^(2l+n) with 2l = 1, n = 1
}

TEST_CASE("invariance spot") {
    TensorFn f = basis_fn(enumerate_indices(Family::F, 1, HalfInt(1))[0]);
    TensorFn g = basis_fn(enumerate_indices(Family::Gp, 1, HalfInt(1))[0]);
    for (const auto& x : one_block_generators())
        CHECK((bilinear_pairing(act_algebra(x, f), g) + bilinear_pairing(f, act_algebra(x, g)))
                  .is_zero());
}

TEST_CASE("rank utilities") {
    std::vector<std::vector<GaussianRational>> rows = {
        {q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(0), q(1), q(1)}};
    CHECK(exact_rank(rows) == 2);
    rows[1][2] = q(7);
    CHECK(exact_rank(rows) == 3);
    std::vector<TensorFn> fns;
    for (const auto& bi : enumerate_indices(Family::F, 2, HalfInt(1))) fns.push_back(basis_fn(bi));
    CHECK(span_dimension(fns) == static_cast<int>(fns.size()));
    fns.push_back(q(2) * fns[0]);
    CHECK(span_dimension(fns) == static_cast<int>(fns.size()) - 1);
}

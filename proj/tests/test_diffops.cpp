#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nregular/diff_ops.hpp"
#include "nregular/reps_basis.hpp"

using namespace nregular;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(n, d); }

TensorFn col(const LaurentFn& a, const LaurentFn& b) {
    TensorFn f(Side::Column, 1);
    f.components[0] = a;
    f.components[1] = b;
    return f;
}
} // namespace

TEST_CASE("classical regular examples") {
    LaurentFn z11 = LaurentFn::coordinate(1, 1);
    LaurentFn z12 = LaurentFn::coordinate(1, 2);
    LaurentFn z21 = LaurentFn::coordinate(2, 1);
    LaurentFn z22 = LaurentFn::coordinate(2, 2);
    // constants and the matrix columns are regular
    CHECK(is_n_regular(col(LaurentFn::one(), LaurentFn::zero())));
    CHECK(is_n_regular(col(z11, z12)));
    CHECK(is_n_regular(col(z21, z22)));
    // the transposed column is not
    CHECK_FALSE(is_n_regular(col(z11, z21)));
    // the Cauchy-Fueter kernel column Z+ N^{-2} . (1,0)
    LaurentFn n2 = LaurentFn::norm_inverse(2);
    CHECK(is_n_regular(col(z22 * n2, -(z21 * n2))));
    // rows: the same data on the row side
    TensorFn r(Side::Row, 1);
    r.components[0] = z11;
    r.components[1] = z21;
    CHECK(is_n_regular(r));
    r.components[1] = z12;
    CHECK_FALSE(is_n_regular(r));
}

TEST_CASE("laplacian factorizations") {
    LaurentFn z11 = LaurentFn::coordinate(1, 1);
    LaurentFn f = z11 * z11 * LaurentFn::coordinate(2, 2);
    CHECK(laplacian(f) == q(8) * z11);
    CHECK(laplacian(LaurentFn::norm_inverse(1)).is_zero());
    TensorFn g = col(f, LaurentFn::norm_inverse(1));
    CHECK(nabla_plus_slot(nabla_slot(g, 1), 1) == laplacian(g));
    CHECK(nabla_slot(nabla_plus_slot(g, 1), 1) == laplacian(g));
}

TEST_CASE("degree operators") {
    LaurentFn z11 = LaurentFn::coordinate(1, 1);
    TensorFn f = col(z11 * z11, LaurentFn::norm_inverse(1));
    TensorFn d = deg_op(f);
    CHECK(d.components[0] == q(2) * z11 * z11);
    CHECK(d.components[1] == q(-2) * LaurentFn::norm_inverse(1));
    CHECK(deg_shift(f, 3).components[0] == q(5) * z11 * z11);
    CHECK(deg_shift_inverse(deg_shift(f, 3), 3) == f);
    TensorFn res = col(LaurentFn::norm_inverse(1), LaurentFn::zero());
    CHECK_THROWS_AS(deg_shift_inverse(res, 2), ResonantDegreeError);
}

TEST_CASE("Dn ladder") {
    LaurentFn z11 = LaurentFn::coordinate(1, 1);
    TensorFn f(Side::Column, 2);
    f.components[0] = z11 * z11 * z11;
    // D_2 = deg + 2: degree 3 piece scaled by 5
    CHECK(Dn(f, 2).components[0] == q(5) * f.components[0]);
    // D_3 = (deg+3)(deg+2) on rank 3
    TensorFn g(Side::Column, 3);
    g.components[5] = z11;
    CHECK(Dn(g, 3).components[5] == q(12) * z11);
    CHECK(Dn_inverse(Dn(g, 3), 3) == g);
    CHECK(Dn(f, 1) == f); // empty product
}

TEST_CASE("degree identities on samples") {
    Mat2L z = Mat2L::z_matrix();
    Mat2L zp{LaurentFn::coordinate(2, 2), -LaurentFn::coordinate(1, 2),
             -LaurentFn::coordinate(2, 1), LaurentFn::coordinate(1, 1)};
    TensorFn f = col(LaurentFn::coordinate(1, 1) * LaurentFn::coordinate(1, 2),
                     LaurentFn::norm_inverse(1) * LaurentFn::coordinate(2, 1));
    TensorFn lhs = q(2) * deg_shift(f, 2);
    CHECK(lhs == slot_apply(zp, 1, nabla_plus_slot(f, 1)) + nabla_slot(slot_apply(z, 1, f), 1));
    CHECK(lhs == nabla_plus_slot(slot_apply(zp, 1, f), 1) + slot_apply(z, 1, nabla_slot(f, 1)));
}

TEST_CASE("regularity of derived families is slotwise") {
    // rank-2 member: every slot annihilated individually
    TensorFn v = F_basis(2, HalfInt(2), HalfInt(0), HalfInt(0));
    CHECK_FALSE(v.is_zero());
    CHECK(nabla_plus_slot(v, 1).is_zero());
    CHECK(nabla_plus_slot(v, 2).is_zero());
}

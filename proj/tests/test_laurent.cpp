#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nregular/laurent.hpp"

using namespace nregular;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(n, d); }
const LaurentFn z11 = LaurentFn::coordinate(1, 1);
const LaurentFn z12 = LaurentFn::coordinate(1, 2);
const LaurentFn z21 = LaurentFn::coordinate(2, 1);
const LaurentFn z22 = LaurentFn::coordinate(2, 2);
} // namespace

TEST_CASE("canonical form") {
    LaurentFn n = LaurentFn::norm_poly();
    CHECK(n == z11 * z22 - z12 * z21);
    CHECK(n * LaurentFn::norm_inverse(1) == LaurentFn::one());
    CHECK(n * LaurentFn::norm_inverse(3) == LaurentFn::norm_inverse(2));
    // numerator divisible by N is reduced away
    LaurentFn f = LaurentFn::term({1, 0, 0, 1}, q(1), 1) - LaurentFn::term({0, 1, 1, 0}, q(1), 1);
    CHECK(f == LaurentFn::one());
    CHECK(f.denom_pow() == 0);
    CHECK((n * n * z11).denom_pow() == 0);
    CHECK((LaurentFn::norm_inverse(2) * n * z11) == z11 * LaurentFn::norm_inverse(1));
}

TEST_CASE("arithmetic and homogeneity") {
    LaurentFn f = z11 * z11 + q(3) * z12 * z21;
    CHECK(f.is_homogeneous());
    int d = 0;
    CHECK(f.is_homogeneous(&d));
    CHECK(d == 2);
    LaurentFn g = f * LaurentFn::norm_inverse(2);
    CHECK(g.is_homogeneous(&d));
    CHECK(d == -2);
    LaurentFn mixed = f + z11;
    CHECK_FALSE(mixed.is_homogeneous());
    auto split = mixed.homogeneous_split();
    CHECK(split.size() == 2);
    CHECK(split.at(2) == f);
    CHECK(split.at(1) == z11);
}

TEST_CASE("partials") {
    CHECK(z11.partial(1, 1) == LaurentFn::one());
    CHECK(z11.partial(1, 2).is_zero());
    CHECK((z11 * z11 * z22).partial(1, 1) == q(2) * z11 * z22);
    // quotient rule on N^{-1}
    CHECK(LaurentFn::norm_inverse(1).partial(1, 1) == -(z22 * LaurentFn::norm_inverse(2)));
    CHECK(LaurentFn::norm_inverse(1).partial(1, 2) == z21 * LaurentFn::norm_inverse(2));
    CHECK(LaurentFn::norm_inverse(1).partial(2, 1) == z12 * LaurentFn::norm_inverse(2));
    CHECK(LaurentFn::norm_inverse(1).partial(2, 2) == -(z11 * LaurentFn::norm_inverse(2)));
    // mixed partials commute
    LaurentFn f = z11 * z12 * LaurentFn::norm_inverse(2);
    CHECK(f.partial(1, 1).partial(2, 2) == f.partial(2, 2).partial(1, 1));
}

TEST_CASE("evaluation") {
    Biquaternion p(q(1), q(2), q(0), q(1));
    CHECK((z11 * z22).evaluate(p) == q(1));
    CHECK(LaurentFn::norm_inverse(1).evaluate(p) == q(1));
    Biquaternion two = q(2) * Biquaternion::one();
    CHECK(LaurentFn::norm_inverse(2).evaluate(two) == q(1, 16));
    Biquaternion nullcone(q(1), q(1), q(1), q(1));
    CHECK((z11 + z12).evaluate(nullcone) == q(2));
    CHECK_THROWS_AS(LaurentFn::norm_inverse(1).evaluate(nullcone), PoleAtNullConeError);
}

TEST_CASE("substitutions") {
    LaurentFn f = z11 * z11 * z22 * LaurentFn::norm_inverse(1);
    // Z -> Z^{-1} twice is the identity
    CHECK(f.substitute_inverse().substitute_inverse() == f);
    // entry dictionary of the inverse on a point
    Biquaternion p(q(2), q(1), q(0), q(3));
    CHECK(f.substitute_inverse().evaluate(p) == f.evaluate(invert(p)));
    // translation on polynomials
    LaurentFn g = z11 * z21 + q(2) * z22;
    Biquaternion b(q(1), q(0), q(5), q(-2));
    CHECK(g.substitute_translate(b).evaluate(p) == g.evaluate(p + b));
    CHECK_THROWS_AS(f.substitute_translate(b), NotPolynomialError);
    // linear change: the transpose swap z12 <-> z21 with conjugated coefficients
    CHECK((GaussianRational::i() * z12).conj_transpose_arg() == -(GaussianRational::i() * z21));
}

TEST_CASE("x dictionary round trip") {
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            LaurentFn z = LaurentFn::coordinate(i, j);
            CHECK(x_poly_to_laurent(z.to_x_poly()) == z);
        }
    XPoly p = XPoly::variable(0) * XPoly::variable(1) + XPoly::variable(2).pow(2);
    CHECK(x_poly_to_laurent(p).to_x_poly() == p);
    // the norm is the Euclidean square in x
    XPoly r2;
    for (int k = 0; k < 4; ++k) r2 = r2 + XPoly::variable(k).pow(2);
    CHECK(LaurentFn::norm_poly().to_x_poly() == r2);
}

TEST_CASE("sphere conjugate") {
    // on real points of the sphere, sphere_conjugate(f) evaluates to conj(f)
    LaurentFn f = z11 * z11 * z12 + GaussianRational::i() * z22;
    EBasisCoords c({q(1, 2), q(1, 2), q(1, 2), q(1, 2)});
    Biquaternion p = coords_to_matrix(c);
    CHECK(norm(p) == q(1));
    CHECK(f.sphere_conjugate().evaluate(p) == f.evaluate(p).conj());
}

TEST_CASE("canonical string determinism") {
    LaurentFn f = z11 * z22 + q(2) * z12 * z21;
    LaurentFn g = q(2) * z21 * z12 + z22 * z11;
    CHECK(f.canonical_string() == g.canonical_string());
    CHECK(f.canonical_string() != (f + z11).canonical_string());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nregular/biquaternion.hpp"

using namespace nregular;

namespace {
GaussianRational q(long n, long d = 1) { return GaussianRational(n, d); }
} // namespace

TEST_CASE("gaussian rational field") {
    GaussianRational a(mpq_class(1, 2), mpq_class(3));
    GaussianRational b(mpq_class(-2), mpq_class(1, 5));
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK((a * b) * a.inverse() == b);
    CHECK(GaussianRational::i() * GaussianRational::i() == q(-1));
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK(a.norm() == mpq_class(1, 4) + 9);
    CHECK(GaussianRational(mpq_class(2, 4)).str() == "1/2");
    CHECK(GaussianRational(mpq_class(0), mpq_class(-1)).str() == "-1*i");
    CHECK_THROWS(GaussianRational().inverse());
}

TEST_CASE("unit table") {
    Biquaternion e0 = Biquaternion::one();
    Biquaternion e1 = Biquaternion::unit(1);
    Biquaternion e2 = Biquaternion::unit(2);
    Biquaternion e3 = Biquaternion::unit(3);
    CHECK(e1 * e2 == e3);
    CHECK(e2 * e3 == e1);
    CHECK(e3 * e1 == e2);
    CHECK(e2 * e1 == -e3);
    CHECK(e1 * e1 == -e0);
    CHECK(e2 * e2 == -e0);
    CHECK(e3 * e3 == -e0);
    CHECK(norm(e1) == q(1));
    CHECK(conj_plus(e1) == -e1);
    CHECK(conj_plus(e0) == e0);
}

TEST_CASE("norm, conjugation, inversion") {
    Biquaternion z(q(1), q(2), q(3), q(4));
    Biquaternion w(q(-1), q(1, 2), q(0), q(5));
    CHECK(norm(z * w) == norm(z) * norm(w));
    CHECK(conj_plus(z * w) == conj_plus(w) * conj_plus(z));
    CHECK(z * conj_plus(z) == Biquaternion::scalar(norm(z)));
    CHECK(z * invert(z) == Biquaternion::one());
    CHECK(invert(z) * z == Biquaternion::one());
    Biquaternion nullcone(q(1), q(1), q(1), q(1));
    CHECK(norm(nullcone) == q(0));
    CHECK_THROWS_AS(invert(nullcone), NonInvertibleError);
}

TEST_CASE("coordinate dictionary") {
    // e-basis coordinates (1, 2, 3, 4): z11 = 1 - 4i, z12 = -3 - 2i, ...
    EBasisCoords c({q(1), q(2), q(3), q(4)});
    Biquaternion z = coords_to_matrix(c);
    CHECK(z.z11 == GaussianRational(mpq_class(1), mpq_class(-4)));
    CHECK(z.z12 == GaussianRational(mpq_class(-3), mpq_class(-2)));
    CHECK(z.z21 == GaussianRational(mpq_class(3), mpq_class(-2)));
    CHECK(z.z22 == GaussianRational(mpq_class(1), mpq_class(4)));
    CHECK(norm(z) == q(1 + 4 + 9 + 16));
    for (int i = 0; i < 4; ++i)
        CHECK(matrix_to_coords(z).c[static_cast<size_t>(i)] == c.c[static_cast<size_t>(i)]);
    CHECK(bar(z) == z);           // real coordinates are fixed by bar
    CHECK(adjoint(z) == conj_plus(z)); // and conjugation = adjoint there
}

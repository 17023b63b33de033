#include "support.hpp"

#include <doctest.h>

using namespace hcl;
using namespace hcl::testing;

namespace {

Cube const A{0, 2, 2, -1, 1, 0, 0, -3};
Cube const B{0, -1, -2, -1, -1, 0, 0, 6};
Cube const C{-1, 2, 2, -2, 1, 5, -1, -11};
Cube const R{0, 2, 2, -1, 1, 0, 0, -3};
Cube const S{1, -2, -1, 0, -1, 1, -6, 12};
Cube const T{0, 2, 1, 0, 1, -1, 0, -6};

IntMatrix random_alternating(long bound)
{
    IntMatrix M(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            M(i, j) = uniform(-bound, bound);
            M(j, i) = -M(i, j);
        }
    return M;
}

Cube random_doubly_symmetric(long bound)
{
    Cube X = random_cube(bound);
    X.a[2] = X.a[1];
    X.a[6] = X.a[5];
    return X;
}

}  // namespace

TEST_CASE("phi places the cube faces in the off-diagonal blocks")
{
    for (int n = 0; n < 200; ++n) {
        Cube X = random_cube(9);
        QuatAltPair P = phi(X);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                CHECK(P.F1(i, 2 + j) == X(0, i, j));
                CHECK(P.F1(2 + j, i) == -X(0, i, j));
                CHECK(P.F2(i, 2 + j) == X(1, i, j));
                CHECK(P.F2(2 + j, i) == -X(1, i, j));
                CHECK(P.F1(i, j) == 0);
                CHECK(P.F1(2 + i, 2 + j) == 0);
            }
        CHECK(is_alternating(P.F1));
        CHECK(is_alternating(P.F2));
    }
}

TEST_CASE("the Pfaffian squares to the determinant")
{
    for (int n = 0; n < 300; ++n) {
        IntMatrix M = random_alternating(9);
        BigInt pf = pfaffian(M);
        CHECK(pf * pf == M.det());
    }
    IntMatrix J(4, 4);
    J(0, 1) = 1;
    J(1, 0) = -1;
    J(2, 3) = 1;
    J(3, 2) = -1;
    CHECK(pfaffian(J) == 1);
    // [0, I; -I, 0] has Pfaffian -1 under this sign convention
    IntMatrix K(4, 4);
    K(0, 2) = K(1, 3) = 1;
    K(2, 0) = K(3, 1) = -1;
    CHECK(pfaffian(K) == -1);
    IntMatrix bad = J;
    bad(0, 0) = 1;
    CHECK_THROWS_AS(pfaffian(bad), InputError);
}

TEST_CASE("the Pfaffian form of phi(A) is Q1 of A")
{
    for (int n = 0; n < 500; ++n) {
        Cube X = random_cube(8);
        QuatAltPair P = phi(X);
        CHECK(pair_pfaffian_form(P) == assoc_forms(X)[0]);
        CHECK(pair_disc(P) == cube_disc(X));
    }
}

TEST_CASE("phi intertwines the companion maps")
{
    for (int n = 0; n < 500; ++n) {
        Cube X = random_cube(8);
        CHECK(pair_companion(phi(X)) == phi(companion_cube(X)));
    }
}

TEST_CASE("worked quaternary example at discriminant -47")
{
    CHECK(companion_cube(A) == Cube{4, -2, -2, -11, 0, -6, -6, 3});
    CHECK(companion_cube(B) == Cube{-2, 0, 0, 12, 1, 6, 12, 0});
    CHECK(companion_cube(C) == Cube{2, 10, -2, -22, 5, -17, -11, 23});
    CHECK(pair_pfaffian_form(phi(C)) == BQF{2, 1, 6});
    // Q2 and Q3 use the same factor labelling as the 2x2x2 cube example at -47.
    CHECK(assoc_forms(B)[1] == BQF{1, -1, 12});
    CHECK(assoc_forms(B)[2] == BQF{2, -1, 6});
    CHECK(assoc_forms(C)[1] == BQF{7, 25, 24});
    CHECK(assoc_forms(C)[2] == BQF{1, 1, 12});
    Verdict v = verify_quaternary_composition(A, B, C, R, S, T);
    CHECK_MESSAGE(v.ok, (v.reasons.empty() ? "" : v.reasons.front()));
    Cube bad = T;
    bad.a[3] += 1;
    CHECK_FALSE(verify_quaternary_composition(A, B, C, R, S, bad).ok);
    CHECK_THROWS_AS(verify_quaternary_composition(C, B, A, R, S, T), InputError);
}

TEST_CASE("quaternary identity instances")
{
    for (long D : {-47L, 8L, 5L}) {
        Cube I = identity_cube(D);
        CHECK(verify_quaternary_composition(I, I, I, I, I, I).ok);
    }
}

TEST_CASE("random doubly symmetric cubes keep the quaternary Pfaffian law")
{
    for (int n = 0; n < 200; ++n) {
        Cube X = random_doubly_symmetric(6);
        CHECK(is_doubly_symmetric(X));
        QuatAltPair P = phi(X);
        CHECK(P.trilinear().dims() == std::vector<std::size_t>{2, 4, 4});
        CHECK(pair_pfaffian_form(pair_companion(P)) == assoc_forms(companion_cube(X))[0]);
    }
}

TEST_CASE("senary 3-forms are alternating and evaluate consistently")
{
    for (int n = 0; n < 20; ++n) {
        SenaryAlt3 E;
        for (auto & x : E.a)
            x = uniform(-5, 5);
        MultiForm t = E.trilinear();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                for (int k = 0; k < 6; ++k) {
                    BigInt c = E.coefficient(i, j, k);
                    CHECK(t.at({std::size_t(i), std::size_t(j), std::size_t(k)}) == c);
                    CHECK(E.coefficient(j, i, k) == -c);
                    CHECK(E.coefficient(i, k, j) == -c);
                }
        Vec x(6), y(6), z(6);
        for (int i = 0; i < 6; ++i) {
            x[i] = uniform(-4, 4);
            y[i] = uniform(-4, 4);
            z[i] = uniform(-4, 4);
        }
        CHECK(E(x, y, z) == multiform_eval(t, {x, y, z}));
        CHECK(E(x, x, z) == 0);
    }
    CHECK(SenaryAlt3::index(0, 1, 2) == 0);
    CHECK(SenaryAlt3::index(3, 4, 5) == 19);
}

TEST_CASE("wedge222 evaluates the cube on the three coordinate blocks")
{
    for (int n = 0; n < 50; ++n) {
        Cube X = random_cube(7);
        SenaryAlt3 W = wedge222(X);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(W.coefficient(i, 2 + j, 4 + k) == X(i, j, k));
    }
}

TEST_CASE("the senary identity pair comes from 3x3 determinants over S")
{
    for (long D : {-47L, -4L, 5L, 8L}) {
        SenaryPair P = senary_identity_pair(D);
        CHECK(P.E == wedge222(identity_cube(D)));
        auto ring = ring_of_discriminant(D);
        CHECK(senary_identity_cube(D) == Cube{1, 0, 0, ring.c.get_si(), 0, 1, 1, ring.eps});
    }
    CHECK_THROWS(senary_identity_pair(0));
}

TEST_CASE("senary identity holds with the product bilinear map")
{
    Verdict v = verify_senary_identity(-4, SenaryBilinear::product);
    CHECK_MESSAGE(v.ok, (v.reasons.empty() ? "" : v.reasons.front()));
    CHECK_FALSE(verify_senary_identity(-4, SenaryBilinear::iota).ok);
    Cube wrong = senary_identity_cube(-4);
    wrong.a[0] += 1;
    CHECK_FALSE(verify_senary_identity_with(-4, wrong, SenaryBilinear::product).ok);
}

#include "hcl/bqf.hpp"
#include "hcl/lattice.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hcl;
using namespace hcl::testing;

namespace {

KElem random_kelem(QuadraticRing const & S, long bound = 9)
{
    long d = uniform(1, 4);
    return KElem(S, uniform(-bound, bound), uniform(-bound, bound), d);
}

// (p1 + q1 t)(p2 + q2 t) with t^2 = eps t + c, written out by hand.
std::pair<BigInt, BigInt> mul_oracle(QuadraticRing const & S, BigInt p1, BigInt q1, BigInt p2, BigInt q2)
{
    return {p1 * p2 + S.c * q1 * q2, p1 * q2 + p2 * q1 + S.eps * q1 * q2};
}

}  // namespace

TEST_CASE("ring of discriminant")
{
    auto S = ring_of_discriminant(-47);
    CHECK(S.eps == 1);
    CHECK(S.c == -12);
    auto T = ring_of_discriminant(8);
    CHECK(T.eps == 0);
    CHECK(T.c == 2);
    CHECK_THROWS_AS(ring_of_discriminant(7), InputError);
    CHECK_THROWS_AS(ring_of_discriminant(-2), InputError);
}

TEST_CASE("field arithmetic agrees with the hand-expanded product")
{
    for (long D : {-47L, -4L, -3L, 5L, 8L, 13L}) {
        auto S = ring_of_discriminant(D);
        KElem tau = KElem::tau(S);
        CHECK(tau * tau == KElem(S, S.c, S.eps));
        for (int i = 0; i < 100; ++i) {
            BigInt p1 = uniform(-20, 20), q1 = uniform(-20, 20), p2 = uniform(-20, 20), q2 = uniform(-20, 20);
            auto [p, q] = mul_oracle(S, p1, q1, p2, q2);
            CHECK(KElem(S, p1, q1) * KElem(S, p2, q2) == KElem(S, p, q));
            KElem x = random_kelem(S), y = random_kelem(S);
            CHECK((x + y) - y == x);
            CHECK(x.norm() == (x * x.conj()).rational_part());
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK(x.trace() == (x + x.conj()).rational_part());
            if (!x.is_zero())
                CHECK(x * x.inverse() == KElem(S, 1));
        }
    }
}

TEST_CASE("cube roots in K")
{
    auto S = ring_of_discriminant(-23);
    for (int i = 0; i < 50; ++i) {
        KElem x = random_kelem(S, 6);
        if (x.is_zero())
            continue;
        auto r = kelem_cube_root(x * x * x);
        REQUIRE(r.has_value());
        CHECK(*r * *r * *r == x * x * x);
    }
    CHECK_FALSE(kelem_cube_root(KElem(S, 2)).has_value());
    CHECK_FALSE(kelem_cube_root(KElem::tau(S)).has_value());
}

TEST_CASE("torsion unit counts")
{
    CHECK(torsion_units(ring_of_discriminant(-3)).size() == 6);
    CHECK(torsion_units(ring_of_discriminant(-4)).size() == 4);
    CHECK(torsion_units(ring_of_discriminant(-23)).size() == 2);
    for (auto const & u : torsion_units(ring_of_discriminant(-3)))
        CHECK(u.norm() == 1);
}

TEST_CASE("ideal norms are multiplicative with orientation")
{
    for (long D : {-47L, -23L, -20L, 5L, 12L}) {
        auto S = ring_of_discriminant(D);
        for (int i = 0; i < 40; ++i) {
            KElem g1 = random_kelem(S), g2 = random_kelem(S), h1 = random_kelem(S), h2 = random_kelem(S);
            if (g1.is_zero() || h1.is_zero())
                continue;
            int mu = uniform(0, 1) ? 1 : -1;
            OrientedIdeal I = OrientedIdeal::from_generators(S, {g1, g2, g1 * KElem::tau(S), g2 * KElem::tau(S)}, mu);
            OrientedIdeal J = OrientedIdeal::from_generators(S, {h1, h2, h1 * KElem::tau(S), h2 * KElem::tau(S)}, 1);
            CHECK(I.mu() == mu);
            CHECK(sign(ideal_norm(I)) == mu);
            OrientedIdeal IJ = ideal_mul(I, J);
            CHECK(ideal_norm(IJ) == ideal_norm(I) * ideal_norm(J));
            CHECK(I.contains(g1));
            CHECK(I.contains(g2 * KElem::tau(S)));
            OrientedIdeal Iinv = ideal_inverse(I);
            CHECK(ideal_mul(I, Iinv) == OrientedIdeal::unit(S));
            KElem k = random_kelem(S);
            if (!k.is_zero())
                CHECK(ideal_norm(ideal_scale(k, I)) == k.norm() * ideal_norm(I));
            CHECK(I.canonical() == I);
        }
    }
}

TEST_CASE("principal ideals are detected with their generator")
{
    auto S = ring_of_discriminant(-47);
    for (int i = 0; i < 40; ++i) {
        KElem k = random_kelem(S);
        if (k.is_zero())
            continue;
        OrientedIdeal I = ideal_scale(k, OrientedIdeal::unit(S));
        auto g = principal_generator(I);
        REQUIRE(g.has_value());
        CHECK(ideal_scale(*g, OrientedIdeal::unit(S)) == I);
    }
    // <2, tau> has norm 2 and no element of norm 2 exists in Z[tau], tau^2 = tau - 12
    OrientedIdeal P(S, KElem(S, 2), KElem::tau(S));
    CHECK_FALSE(principal_generator(P).has_value());
}

TEST_CASE("Lagrange-Gauss reduction finds the lattice minimum")
{
    for (int trial = 0; trial < 100; ++trial) {
        Gram2 g{make_rat(uniform(1, 9)), make_rat(uniform(-3, 3)), make_rat(uniform(4, 12))};
        std::array<Vec2, 2> basis{Vec2{uniform(-8, 8), uniform(-8, 8)}, Vec2{uniform(-8, 8), uniform(-8, 8)}};
        BigInt det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
        if (det == 0)
            continue;
        auto r = lagrange_gauss_reduce(basis, g);
        BigRat brute = -1;
        for (long x = -30; x <= 30; ++x)
            for (long y = -30; y <= 30; ++y) {
                if (x == 0 && y == 0)
                    continue;
                Vec2 v{x * basis[0][0] + y * basis[1][0], x * basis[0][1] + y * basis[1][1]};
                BigRat val = g.value(v);
                if (brute < 0 || val < brute)
                    brute = val;
            }
        CHECK(r.minimum == brute);
        CHECK(abs(r.change.det()) == 1);
    }
}

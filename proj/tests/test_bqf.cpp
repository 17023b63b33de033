#include "hcl/cube.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace hcl;
using namespace hcl::testing;

namespace {

// Reduced positive definite forms counted directly: |b| <= a <= c, b >= 0 on the boundary.
std::size_t brute_positive_class_count(long D)
{
    std::size_t n = 0;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b - D) % (4 * a) != 0)
                continue;
            long c = (b * b - D) / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1)
                continue;
            ++n;
        }
    return n;
}

BQF random_form_of_disc(long D, long bound)
{
    for (;;) {
        long a = uniform(1, bound), b = uniform(-bound, bound);
        if ((b * b - D) % (4 * a) != 0)
            continue;
        BQF Q{a, b, (b * b - D) / (4 * a)};
        if (Q.is_primitive())
            return Q;
    }
}

}  // namespace

TEST_CASE("class numbers match the direct count of reduced forms")
{
    for (long D : {-3L, -4L, -20L, -23L, -47L, -56L, -71L, -84L, -151L, -199L}) {
        auto G = enumerate_class_group(D);
        CHECK(G.positive_count == brute_positive_class_count(D));
        CHECK(check_group_axioms(G).empty());
    }
    CHECK(enumerate_class_group(-47).positive_count == 5);
    CHECK(enumerate_class_group(-23).positive_count == 3);
    CHECK(enumerate_class_group(-4).positive_count == 1);
}

TEST_CASE("indefinite class groups satisfy the group axioms")
{
    for (long D : {5L, 8L, 12L, 13L, 40L, 60L, 145L}) {
        auto G = enumerate_class_group(D);
        CHECK(check_group_axioms(G).empty());
        CHECK(G.reps[G.identity] == reduce(principal_form(D)).form);
    }
    CHECK(enumerate_class_group(8).reps.size() == 1);
}

TEST_CASE("reduction is an SL2 invariant and reports its transform")
{
    for (long D : {-47L, -71L, -20L, 13L, 40L}) {
        for (int i = 0; i < 60; ++i) {
            BQF Q = random_form_of_disc(D, 15);
            IntMatrix g = random_sl2();
            BQF P = sl2_act(Q, g);
            CHECK(P.disc() == D);
            auto rq = reduce(Q), rp = reduce(P);
            CHECK(rq.form == rp.form);
            CHECK(sl2_act(Q, rq.g) == rq.form);
            CHECK(rq.g.det() == 1);
            CHECK(is_reduced(rq.form));
            CHECK(bqf_equivalent(P, Q));
        }
    }
}

TEST_CASE("Dirichlet composition agrees with ideal multiplication")
{
    for (long D : {-47L, -71L, -84L, 5L, 40L}) {
        for (int i = 0; i < 40; ++i) {
            BQF P = random_form_of_disc(D, 20), Q = random_form_of_disc(D, 20);
            BQF viaIdeals = ideal_to_bqf(ideal_mul(bqf_to_ideal(P), bqf_to_ideal(Q)));
            CHECK(viaIdeals.disc() == D);
            CHECK(bqf_equivalent(compose_dirichlet(P, Q), viaIdeals));
        }
    }
}

TEST_CASE("form to ideal and back is the identity on classes")
{
    for (long D : {-23L, -56L, 12L}) {
        for (int i = 0; i < 30; ++i) {
            BQF Q = random_form_of_disc(D, 20);
            OrientedIdeal I = bqf_to_ideal(Q);
            CHECK(ideal_to_bqf(I) == Q);
        }
    }
}

TEST_CASE("composition of [2,1,6] with [2,-1,6] is principal")
{
    CHECK(compose_dirichlet({2, 1, 6}, {2, -1, 6}) == BQF{1, 1, 12});
    std::set<BQF> seen;
    auto G = enumerate_class_group(-47);
    for (auto const & Q : G.reps)
        if (Q.a > 0)
            seen.insert(Q);
    CHECK(seen.size() == 5);
}

TEST_CASE("Lemmermeyer's identity holds for random cubes")
{
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        Cube A = random_cube(6);
        if (cube_disc(A) == 0)
            continue;
        auto L = lemmermeyer_identity(A);
        CHECK_MESSAGE(L.verdict.ok, A.to_string());
        ++checked;
    }
    CHECK(checked > 400);
}

TEST_CASE("Gauss identity rejects a wrong composite")
{
    Cube A{0, 2, 2, -1, 1, 0, 0, -3};
    auto L = lemmermeyer_identity(A);
    REQUIRE(L.verdict.ok);
    BQF wrong = L.forms[2];
    wrong.c += 1;
    CHECK_FALSE(verify_gauss_identity(L.forms[0], L.forms[1], wrong, L.data).ok);
}

#include "support.hpp"

#include <doctest.h>

using namespace hcl;
using namespace hcl::testing;

namespace {

BinaryCubic const f{{0, 1, 0, 2}};
BinaryCubic const g{{1, 1, 2, 2}};
BinaryCubic const h{{1, 0, 1, 2}};
Cube const Rc{0, -1, -1, -1, 1, 1, 0, 2};

PairBQF const F({0, 80, -63}, {1, -30, 23});
PairBQF const G({-9, -2, 1}, {10, 4, -1});
PairBQF const H({2, 0, -1}, {-1, -4, 1});
Cube const Rp{20, 70, -6, -101, -7, -25, 2, 36};
Cube const Sp{-4, 9, 4, 1, 4, -7, -3, -1};

// a x^3 + 3b x^2 y + 3c x y^2 + d y^3
BigInt cubic_disc_oracle(BinaryCubic const & c)
{
    BigInt const &a = c.a[0], &b = c.a[1], &cc = c.a[2], &d = c.a[3];
    return a * a * d * d - 6 * a * b * cc * d + 4 * a * cc * cc * cc + 4 * b * b * b * d - 3 * b * b * cc * cc;
}

BQF cubic_form_oracle(BinaryCubic const & c)
{
    BigInt const &a = c.a[0], &b = c.a[1], &cc = c.a[2], &d = c.a[3];
    return {b * b - a * cc, a * d - b * cc, cc * cc - b * d};
}

BinaryCubic random_projective_cubic(long D, long bound)
{
    for (;;) {
        BinaryCubic c = random_cubic(bound);
        if (cubic_disc(c) == D && is_projective(cubic_embed(c)))
            return c;
    }
}

}  // namespace

TEST_CASE("worked binary cubic example at discriminant 8")
{
    CHECK(cubic_disc(f) == 8);
    CHECK(cubic_disc(g) == 8);
    CHECK(cubic_disc(h) == 8);
    CHECK(cubic_companion(f) == BinaryCubic{{1, 0, 2, 0}});
    CHECK(cubic_companion(g) == BinaryCubic{{-1, -2, -2, -4}});
    CHECK(cubic_companion(h) == BinaryCubic{{1, -1, -1, -3}});
    CHECK(cubic_quadratic_form(f) == BQF{1, 0, -2});
    CHECK(cubic_quadratic_form(g) == BQF{-1, 0, 2});
    CHECK(cubic_quadratic_form(h) == BQF{-1, 2, 1});
    Verdict v = verify_cubic_composition(f, g, h, Rc);
    CHECK_MESSAGE(v.ok, (v.reasons.empty() ? "" : v.reasons.front()));
    // The same data polarized to a six-factor cube identity.
    CHECK(verify_cube_composition(cubic_embed(f), cubic_embed(g), cubic_embed(h), Rc, Rc, Rc).ok);
}

TEST_CASE("binary cubic composition rejects a perturbed witness")
{
    Cube bad = Rc;
    bad.a[0] += 1;
    CHECK_FALSE(verify_cubic_composition(f, g, h, bad).ok);
}

TEST_CASE("cubic invariants match the classical formulas")
{
    for (int i = 0; i < 500; ++i) {
        BinaryCubic c = random_cubic(9);
        Cube A = cubic_embed(c);
        CHECK(is_triply_symmetric(A));
        CHECK(cubic_from_cube(A) == c);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    CHECK(A(x, y, z) == c.a[std::size_t(x + y + z)]);
        CHECK(cubic_disc(c) == cubic_disc_oracle(c));
        CHECK(cubic_quadratic_form(c) == cubic_form_oracle(c));
        CHECK(cubic_embed(cubic_tilde(c)) == cube_tilde(A));
    }
    CHECK_THROWS_AS(cubic_from_cube(Cube{0, 1, 2, 3, 1, 2, 3, 4}), InputError);
}

TEST_CASE("the cubic syzygy holds and companions stay triply symmetric")
{
    for (int i = 0; i < 500; ++i) {
        BinaryCubic c = random_cubic(7);
        CHECK_MESSAGE(syzygy_check(c), c.to_string());
        CHECK(is_triply_symmetric(companion_cube(cubic_embed(c))));
        BinaryCubic cov = cubicovariant(c);
        int eps = mod_floor(cubic_disc(c), 4) == 1 ? 1 : 0;
        BinaryCubic cp = cubic_companion(c);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(cov.a[k] == 2 * cp.a[k] + eps * c.a[k]);
    }
}

TEST_CASE("identity cubic and pair satisfy their composition laws")
{
    for (long D : {-47L, -23L, -4L, 5L, 8L}) {
        BinaryCubic fid = cubic_identity(D);
        CHECK(cubic_disc(fid) == D);
        CHECK(verify_cubic_composition(fid, fid, fid, identity_cube(D)).ok);
        PairBQF pid = pair_identity(D);
        CHECK(pair_disc(pid) == D);
        CHECK(verify_pair_composition(pid, pid, pid, identity_cube(D), identity_cube(D)).ok);
    }
}

TEST_CASE("cubic classes sum to the identity with the cube condition on delta")
{
    for (int i = 0; i < 20; ++i) {
        BinaryCubic c = random_projective_cubic(-23, 4);
        BinaryCubic fid = cubic_identity(-23);
        CHECK(cubic_classes_sum_to_identity(c, cubic_tilde(c), fid).ok);
        CubicComposite cc = cubic_class_compose(c, c);
        CHECK(cubic_disc(cc.form) == -23);
        CHECK(cubic_classes_sum_to_identity(c, c, cubic_tilde(cc.form)).ok);
        CubicTriple t = cubic_to_triple(c);
        BinaryCubic back = triple_to_cubic(t);
        CHECK(bqf_equivalent(cubic_quadratic_form(back), cubic_quadratic_form(c)));
    }
    CHECK_THROWS_AS(cubic_to_triple(f), UnsupportedDomain);
}

TEST_CASE("worked pair example at discriminant -31")
{
    CHECK(pair_disc(F) == -31);
    CHECK(pair_disc(G) == -31);
    CHECK(pair_disc(H) == -31);
    CHECK(pair_embed(F) == Cube{0, 40, 40, -63, 1, -15, -15, 23});
    CHECK(pair_companion(F) == PairBQF({1600, -2560, 1016}, {-569, 910, -361}));
    CHECK(pair_companion(G) == PairBQF({1, 18, 1}, {6, -20, -2}));
    CHECK(pair_companion(H) == PairBQF({0, -8, 1}, {-8, 8, 3}));
    CHECK(verify_pair_composition(F, G, H, Rp, Sp, PairSlot::sigma).ok);
    // The plain second slot does not hold on this data.
    CHECK_FALSE(verify_pair_composition(F, G, H, Rp, Sp, PairSlot::plain).ok);
}

TEST_CASE("pair embedding round trip and odd middle coefficients")
{
    for (int i = 0; i < 300; ++i) {
        PairBQF P({uniform(-9, 9), 2 * uniform(-9, 9), uniform(-9, 9)}, {uniform(-9, 9), 2 * uniform(-9, 9), uniform(-9, 9)});
        Cube A = pair_embed(P);
        CHECK(is_doubly_symmetric(A));
        CHECK(pair_from_cube(A) == P);
        CHECK(pair_disc(P) == cube_disc(A));
        CHECK(is_doubly_symmetric(companion_cube(A)));
        CHECK(pair_embed(pair_companion(P)) == companion_cube(A));
    }
    CHECK_THROWS_AS(PairBQF({1, 1, 1}, {0, 2, 0}), InputError);
}

TEST_CASE("pair class composition lands in the expected classes")
{
    PairBQF FG = pair_class_compose(F, G);
    CHECK(pair_disc(FG) == -31);
    PairBQF FGH = pair_class_compose(FG, H);
    for (auto const & q : assoc_forms(pair_embed(FGH)))
        CHECK(bqf_equivalent(q, principal_form(-31)));
    auto QF = assoc_forms(pair_embed(F)), QG = assoc_forms(pair_embed(G)), QFG = assoc_forms(pair_embed(FG));
    CHECK(bqf_equivalent(QFG[1], compose_dirichlet(QF[1], QG[1])));
}

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hcl/alt_forms.hpp"
#include "hcl/sym_spaces.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace hcl;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool cond, std::string const & what)
    {
        if (!cond) {
            if (ok)
                detail = what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int n, char const * title, double limit_seconds, std::function<Outcome()> const & body)
{
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (std::exception const & e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        o.ok = false;
        std::ostringstream os;
        os << "runtime " << secs << " s exceeds " << limit_seconds << " s";
        o.detail = o.detail.empty() ? os.str() : o.detail + "; " + os.str();
    }
    if (!o.ok)
        ++failures;
    std::printf("criterion %2d %s  %-44s %8.3f s%s%s\n", n, o.ok ? "PASS" : "FAIL", title, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

std::mt19937_64 rng(20240611);

long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Cube const A35{0, -1, -2, -1, -1, 0, 0, 6}, B35{0, 1, 2, 0, 1, 0, -1, -6}, C35{0, 1, 4, -1, 1, 0, 0, -3};
Cube const R35{0, -1, -2, 0, -2, 0, 1, 3}, S35{0, 1, 1, -1, 1, 0, 0, -12}, T35{0, 1, 2, 0, 2, 0, 1, -3};

Cube const A63{0, 2, 2, -1, 1, 0, 0, -3}, B63{0, -1, -2, -1, -1, 0, 0, 6}, C63{-1, 2, 2, -2, 1, 5, -1, -11};
Cube const R63{0, 2, 2, -1, 1, 0, 0, -3}, S63{1, -2, -1, 0, -1, 1, -6, 12}, T63{0, 2, 1, 0, 1, -1, 0, -6};

std::string first_reason(Verdict const & v)
{
    return v.reasons.empty() ? "verdict false" : v.reasons.front();
}

Outcome golden_cubes()
{
    Outcome o;
    Verdict v = verify_cube_composition(A35, B35, C35, R35, S35, T35);
    o.require(v.ok, first_reason(v));
    std::array<std::array<BQF, 3>, 3> printed{{{BQF{2, 1, 6}, BQF{1, -1, 12}, BQF{2, -1, 6}},
                                               {BQF{2, 1, 6}, BQF{1, 1, 12}, BQF{2, -1, 6}},
                                               {BQF{4, -1, 3}, BQF{1, 1, 12}, BQF{4, 1, 3}}}};
    Cube const * cubes[] = {&A35, &B35, &C35};
    for (int c = 0; c < 3; ++c) {
        auto Q = assoc_forms(*cubes[c]);
        for (int i = 0; i < 3; ++i)
            o.require(Q[i] == printed[c][i], "Q" + std::to_string(i + 1) + " of cube " + std::to_string(c) +
                                                 " is " + Q[i].to_string());
    }
    return o;
}

Outcome golden_cubics()
{
    Outcome o;
    BinaryCubic f{{0, 1, 0, 2}}, g{{1, 1, 2, 2}}, h{{1, 0, 1, 2}};
    o.require(cubic_companion(f) == BinaryCubic{{1, 0, 2, 0}}, "f' = " + cubic_companion(f).to_string());
    o.require(cubic_companion(g) == BinaryCubic{{-1, -2, -2, -4}}, "g' = " + cubic_companion(g).to_string());
    o.require(cubic_companion(h) == BinaryCubic{{1, -1, -1, -3}}, "h' = " + cubic_companion(h).to_string());
    for (auto const * c : {&f, &g, &h})
        o.require(cubic_disc(*c) == 8, "disc " + c->to_string() + " != 8");
    Verdict v = verify_cubic_composition(f, g, h, Cube{0, -1, -1, -1, 1, 1, 0, 2});
    o.require(v.ok, first_reason(v));
    return o;
}

Outcome golden_pairs()
{
    Outcome o;
    PairBQF F({0, 80, -63}, {1, -30, 23}), G({-9, -2, 1}, {10, 4, -1}), H({2, 0, -1}, {-1, -4, 1});
    o.require(pair_companion(F) == PairBQF({1600, -2560, 1016}, {-569, 910, -361}), "F' mismatch");
    o.require(pair_companion(G) == PairBQF({1, 18, 1}, {6, -20, -2}), "G' mismatch");
    o.require(pair_companion(H) == PairBQF({0, -8, 1}, {-8, 8, 3}), "H' mismatch");
    for (auto const * P : {&F, &G, &H})
        o.require(pair_disc(*P) == -31, "disc " + P->to_string() + " != -31");
    Cube R{20, 70, -6, -101, -7, -25, 2, 36}, S{-4, 9, 4, 1, 4, -7, -3, -1};
    Verdict v = verify_pair_composition(F, G, H, R, S, PairSlot::sigma);
    o.require(v.ok, first_reason(v));
    bool plain = verify_pair_composition(F, G, H, R, S, PairSlot::plain).ok;
    o.detail = o.ok ? std::string("convention: S^sigma in the second slot (plain S ") + (plain ? "also holds)" : "fails)")
                    : o.detail;
    return o;
}

Outcome golden_quaternary()
{
    Outcome o;
    o.require(companion_cube(A63) == Cube{4, -2, -2, -11, 0, -6, -6, 3}, "A' = " + companion_cube(A63).to_string());
    o.require(companion_cube(B63) == Cube{-2, 0, 0, 12, 1, 6, 12, 0}, "B' = " + companion_cube(B63).to_string());
    o.require(companion_cube(C63) == Cube{2, 10, -2, -22, 5, -17, -11, 23}, "C' = " + companion_cube(C63).to_string());
    o.require(cube_disc(A63) == -47, "disc A != -47");
    Verdict v = verify_quaternary_composition(A63, B63, C63, R63, S63, T63);
    o.require(v.ok, first_reason(v));
    return o;
}

Outcome syzygy_suite()
{
    Outcome o;
    int degenerate = 0;
    for (int i = 0; i < 500; ++i) {
        BinaryCubic f;
        if (i % 10 == 0) {
            // (p x + q y)^3 has discriminant zero
            long p = uniform(-2, 2), q = uniform(-2, 2);
            f = BinaryCubic{{p * p * p, p * p * q, p * q * q, q * q * q}};
        } else if (i % 10 == 5) {
            // y^2 (3 a2 x + a3 y) has discriminant zero
            f = BinaryCubic{{0, 0, uniform(-20, 20), uniform(-20, 20)}};
        } else {
            for (auto & x : f.a)
                x = uniform(-20, 20);
        }
        if (cubic_disc(f) == 0)
            ++degenerate;
        o.require(syzygy_check(f), "syzygy fails for " + f.to_string());
    }
    o.require(degenerate > 0, "no degenerate cubic sampled");
    if (o.ok)
        o.detail = std::to_string(degenerate) + " of 500 with zero discriminant";
    return o;
}

Outcome lemmermeyer_suite()
{
    Outcome o;
    for (int i = 0; i < 500; ++i) {
        Cube A;
        for (auto & x : A.a)
            x = uniform(-20, 20);
        auto L = lemmermeyer_identity(A);
        o.require(L.verdict.ok, "fails for " + A.to_string());
    }
    return o;
}

Outcome class_groups()
{
    Outcome o;
    std::pair<long, std::size_t> counts[] = {{-47, 5}, {-23, 3}, {-4, 1}};
    for (auto [D, n] : counts) {
        auto G = enumerate_class_group(D);
        o.require(G.positive_count == n, "D = " + std::to_string(D) + ": " + std::to_string(G.positive_count) +
                                              " positive definite classes");
        auto ax = check_group_axioms(G);
        o.require(ax.empty(), ax.empty() ? "" : ax.front());
    }
    auto G8 = enumerate_class_group(8);
    o.require(G8.reps.size() == 1, "D = 8: " + std::to_string(G8.reps.size()) + " classes");
    o.require(check_group_axioms(G8).empty(), "D = 8 group axioms");
    std::size_t pairs = 0;
    for (long D : {-47L, -23L}) {
        auto G = enumerate_class_group(D);
        for (auto const & P : G.reps)
            for (auto const & Q : G.reps) {
                BQF oracle = ideal_to_bqf(ideal_mul(bqf_to_ideal(P), bqf_to_ideal(Q)));
                o.require(bqf_equivalent(compose_dirichlet(P, Q), oracle),
                          P.to_string() + " o " + Q.to_string() + " disagrees with ideal product");
                ++pairs;
            }
    }
    if (o.ok)
        o.detail = std::to_string(pairs) + " ordered class pairs checked against ideal multiplication";
    return o;
}

Outcome solver()
{
    Outcome o;
    DualWitness W = dual_cubes_solve(A35, B35, C35);
    Verdict v = verify_cube_composition(A35, B35, C35, W.R, W.S, W.T);
    o.require(v.ok, "solved witness: " + first_reason(v));
    Verdict printed = verify_cube_composition(A35, B35, C35, R35, S35, T35);
    o.require(printed.ok, "printed witness: " + first_reason(printed));
    return o;
}

Outcome round_trip()
{
    Outcome o;
    auto check = [&](Cube const & A) {
        BalancedTriple T = cube_to_triple(A);
        Verdict v = check_triple(A, T);
        o.require(v.ok, A.to_string() + ": " + first_reason(v));
        Cube back = triple_to_cube(T);
        o.require(back == A, A.to_string() + " came back as " + back.to_string());
    };
    for (Cube const * A : {&A35, &B35, &C35, &R35, &S35, &T35, &A63, &B63, &C63, &R63, &S63, &T63})
        check(*A);
    int random = 0;
    while (random < 200) {
        Cube A;
        for (auto & x : A.a)
            x = uniform(-6, 6);
        BigInt D = cube_disc(A);
        if (D == 0 || is_square(D))
            continue;
        check(A);
        ++random;
    }
    return o;
}

}  // namespace

int main()
{
    criterion(1, "cube example, D = -47", 1.0, golden_cubes);
    criterion(2, "binary cubic example, D = 8", 0, golden_cubics);
    criterion(3, "pair example, D = -31", 0, golden_pairs);
    criterion(4, "quaternary example, D = -47", 0, golden_quaternary);
    for (long D : {-47L, -31L, -4L, 5L, 8L, 13L}) {
        std::string title = "senary identity, D = " + std::to_string(D);
        criterion(5, title.c_str(), 10.0, [D] {
            Outcome o;
            Verdict v = verify_senary_identity(D);
            o.require(v.ok, first_reason(v));
            return o;
        });
    }
    criterion(6, "cubic syzygy on 500 random cubics", 0, syzygy_suite);
    criterion(7, "Lemmermeyer identity on 500 random cubes", 0, lemmermeyer_suite);
    criterion(8, "class groups and composition oracle", 0, class_groups);
    criterion(9, "dual cube solver", 5.0, solver);
    criterion(10, "cube/triple round trip", 0, round_trip);
    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}

#include "hcl/bqf.hpp"

#include "hcl/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace hcl {

bool operator<(BQF const & p, BQF const & q)
{
    return std::tie(p.a, p.b, p.c) < std::tie(q.a, q.b, q.c);
}

std::string BQF::to_string() const
{
    return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}

BQF sl2_act(BQF const & Q, IntMatrix const & g)
{
    if (g.rows() != 2 || g.cols() != 2 || g.det() != 1)
        throw InputError("sl2_act: matrix " + g.to_string() + " is not in SL2(Z)");
    BigInt const &p = g(0, 0), &q = g(0, 1), &r = g(1, 0), &s = g(1, 1);
    return BQF{Q(p, r), 2 * Q.a * p * q + Q.b * (p * s + q * r) + 2 * Q.c * r * s, Q(q, s)};
}

BQF principal_form(BigInt const & D)
{
    auto R = ring_of_discriminant(D);
    return BQF{1, R.eps, -R.c};
}

// ---------------------------------------------------------------- reduction

namespace {

void require_reducible(BigInt const & D)
{
    if (D == 0)
        throw UnsupportedDomain("discriminant 0 is degenerate");
    if (is_square(D))
        throw UnsupportedDomain("square discriminant " + D.get_str() + " is not supported");
}

IntMatrix translation(BigInt const & k) { return IntMatrix::mat2(1, k, 0, 1); }
IntMatrix swap_matrix() { return IntMatrix::mat2(0, -1, 1, 0); }

// Positive definite reduction: |b| <= a <= c, b >= 0 if |b| = a or a = c.
ReducedForm reduce_definite(BQF Q)
{
    IntMatrix g = IntMatrix::identity(2);
    auto act = [&](IntMatrix const & m) {
        Q = sl2_act(Q, m);
        g = g * m;
    };
    for (;;) {
        BigInt k = floor_div(Q.a - Q.b, 2 * Q.a);
        if (k != 0)
            act(translation(k));
        if (Q.a > Q.c)
            act(swap_matrix());
        else
            break;
    }
    if (Q.a == Q.c && Q.b < 0)
        act(swap_matrix());
    return {Q, g};
}

// One step of indefinite reduction: (a,b,c) -> (c, b', *) via [[0,-1],[1,t]].
IntMatrix rho_matrix(BQF const & Q, BigInt const & s)
{
    BigInt ac = abs(Q.c);
    BigInt target;
    BigInt residue = mod_floor(-Q.b, 2 * ac);
    if (ac > s) {
        // |c| > sqrt(D): b' in (-|c|, |c|]
        target = residue > ac ? residue - 2 * ac : residue;
    }
    else {
        // largest b' <= floor(sqrt(D)) with b' = -b mod 2|c|
        target = s - mod_floor(s - residue, 2 * ac);
    }
    BigInt t = (target + Q.b) / (2 * Q.c);
    return IntMatrix::mat2(0, -1, 1, t);
}

bool is_reduced_indefinite(BQF const & Q, BigInt const & s)
{
    BigInt a2 = 2 * abs(Q.a);
    return Q.b > 0 && Q.b <= s && a2 - Q.b <= s && a2 + Q.b >= s + 1;
}

}  // namespace

bool is_reduced(BQF const & Q)
{
    BigInt D = Q.disc();
    require_reducible(D);
    if (D < 0) {
        BigInt a = abs(Q.a), b = Q.a > 0 ? Q.b : -Q.b, c = abs(Q.c);
        if (!(-a < b && b <= a && a <= c))
            return false;
        return !(a == c && b < 0);
    }
    return is_reduced_indefinite(Q, isqrt(D));
}

std::vector<BQF> reduced_cycle(BQF const & Q)
{
    BigInt s = isqrt(Q.disc());
    if (!is_reduced_indefinite(Q, s))
        throw InputError("reduced_cycle: " + Q.to_string() + " is not a reduced indefinite form");
    std::vector<BQF> cycle{Q};
    BQF cur = Q;
    for (;;) {
        cur = sl2_act(cur, rho_matrix(cur, s));
        if (cur == Q)
            return cycle;
        cycle.push_back(cur);
    }
}

ReducedForm reduce(BQF const & Q)
{
    BigInt D = Q.disc();
    require_reducible(D);
    if (D < 0) {
        if (Q.a > 0)
            return reduce_definite(Q);
        auto r = reduce_definite(-Q);
        return {-r.form, r.g};
    }

    BigInt s = isqrt(D);
    BQF cur = Q;
    IntMatrix g = IntMatrix::identity(2);
    while (!is_reduced_indefinite(cur, s)) {
        IntMatrix m = rho_matrix(cur, s);
        cur = sl2_act(cur, m);
        g = g * m;
    }
    // Walk the cycle once, remembering the least form and its transform.
    BQF start = cur, best = cur;
    IntMatrix best_g = g;
    for (;;) {
        IntMatrix m = rho_matrix(cur, s);
        cur = sl2_act(cur, m);
        g = g * m;
        if (cur == start)
            break;
        if (cur < best) {
            best = cur;
            best_g = g;
        }
    }
    return {best, best_g};
}

bool bqf_equivalent(BQF const & P, BQF const & Q)
{
    return P.disc() == Q.disc() && reduce(P).form == reduce(Q).form;
}

// ---------------------------------------------------------------- composition

BQF compose_dirichlet(BQF const & Q1, BQF const & Q2)
{
    BigInt D = Q1.disc();
    if (Q2.disc() != D)
        throw InputError("compose_dirichlet: discriminants differ (" + D.get_str() + " vs " +
                         Q2.disc().get_str() + ")");
    if (!Q1.is_primitive() || !Q2.is_primitive())
        throw InputError("compose_dirichlet: forms must be primitive");
    require_reducible(D);

    // Move Q2 so that gcd(a1, a2) = 1; search coprime (x, y) by size.
    BQF P = Q2;
    if (gcd(Q1.a, P.a) != 1) {
        bool found = false;
        for (long n = 1; !found; ++n)
            for (long x = -n; x <= n && !found; ++x)
                for (long y : {-n, n})
                    for (int swap = 0; swap < 2 && !found; ++swap) {
                        long u = swap ? y : x, v = swap ? x : y;
                        BigInt U = u, V = v;
                        BigInt m = Q2(U, V);
                        if (m == 0 || gcd(U, V) != 1 || gcd(m, Q1.a) != 1)
                            continue;
                        BigInt s, r;  // u*s - r*v = 1
                        ext_gcd(U, V, s, r);
                        r = -r;
                        P = sl2_act(Q2, IntMatrix::mat2(U, r, V, s));
                        found = true;
                    }
    }

    BigInt a1 = Q1.a, a2 = P.a, b1 = Q1.b, b2 = P.b;
    BigInt inv, unused;
    ext_gcd(a1, a2, inv, unused);  // inv * a1 = 1 mod a2
    BigInt k = mod_floor(inv * ((b2 - b1) / 2), a2);
    BigInt B = b1 + 2 * a1 * k;
    BigInt num = B * B - D, den = 4 * a1 * a2;
    if (num % den != 0)
        throw InternalError("compose_dirichlet: united forms did not close up");
    return reduce(BQF{a1 * a2, B, num / den}).form;
}

// ---------------------------------------------------------------- class groups

std::size_t ClassGroupTable::index_of(BQF const & Q) const
{
    if (Q.disc() != D)
        throw InputError("form " + Q.to_string() + " has discriminant " + Q.disc().get_str() + ", expected " + D.get_str());
    BQF r = reduce(Q).form;
    auto it = std::find(reps.begin(), reps.end(), r);
    if (it == reps.end())
        throw InputError("form " + Q.to_string() + " is not a primitive class of discriminant " + D.get_str());
    return static_cast<std::size_t>(it - reps.begin());
}

ClassGroupTable enumerate_class_group(BigInt const & D)
{
    ring_of_discriminant(D);
    require_reducible(D);
    ClassGroupTable G;
    G.D = D;

    if (D < 0) {
        BigInt amax = isqrt(floor_div(-D, 3));
        std::vector<BQF> pos;
        for (BigInt a = 1; a <= amax; ++a)
            for (BigInt b = -a + 1; b <= a; ++b) {
                BigInt num = b * b - D;
                if (num % (4 * a) != 0)
                    continue;
                BQF Q{a, b, num / (4 * a)};
                if (Q.c < a || !Q.is_primitive() || !is_reduced(Q))
                    continue;
                pos.push_back(Q);
            }
        // by a, then |b|, positive b first
        std::sort(pos.begin(), pos.end(), [](BQF const & p, BQF const & q) {
            BigInt pb = abs(p.b), qb = abs(q.b), np = -p.b, nq = -q.b;
            return std::tie(p.a, pb, np) < std::tie(q.a, qb, nq);
        });
        G.positive_count = pos.size();
        G.reps = pos;
        for (auto const & Q : pos)
            G.reps.push_back(-Q);
    }
    else {
        BigInt s = isqrt(D);
        std::vector<BQF> seen;
        for (BigInt b = 1; b <= s; ++b) {
            BigInt num = b * b - D;
            if (num % 4 != 0)
                continue;
            BigInt ac = num / 4;
            for (BigInt a = 1; 2 * a <= s + b; ++a) {
                if (2 * a + b < s + 1 || ac % a != 0)
                    continue;
                for (int sg : {1, -1}) {
                    BQF Q{sg * a, b, ac / (sg * a)};
                    if (!Q.is_primitive() || !is_reduced(Q))
                        continue;
                    BQF canon = reduce(Q).form;
                    if (std::find(seen.begin(), seen.end(), canon) == seen.end())
                        seen.push_back(canon);
                }
            }
        }
        std::sort(seen.begin(), seen.end());
        G.reps = seen;
    }

    std::size_t n = G.reps.size();
    G.identity = G.index_of(principal_form(D));
    G.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            G.table[i][j] = G.index_of(compose_dirichlet(G.reps[i], G.reps[j]));
    return G;
}

std::vector<std::string> check_group_axioms(ClassGroupTable const & G)
{
    std::vector<std::string> errs;
    std::size_t n = G.reps.size();
    auto const & T = G.table;
    for (std::size_t i = 0; i < n; ++i) {
        if (T[G.identity][i] != i || T[i][G.identity] != i)
            errs.push_back("identity fails at " + G.reps[i].to_string());
        bool has_inverse = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (T[i][j] == G.identity)
                has_inverse = true;
            if (T[i][j] != T[j][i])
                errs.push_back("not commutative at " + G.reps[i].to_string() + ", " + G.reps[j].to_string());
            for (std::size_t k = 0; k < n; ++k)
                if (T[T[i][j]][k] != T[i][T[j][k]])
                    errs.push_back("not associative at " + G.reps[i].to_string() + ", " + G.reps[j].to_string() +
                                   ", " + G.reps[k].to_string());
        }
        if (!has_inverse)
            errs.push_back("no inverse for " + G.reps[i].to_string());
    }
    return errs;
}

// ---------------------------------------------------------------- forms and ideals

OrientedIdeal bqf_to_ideal(BQF const & Q)
{
    auto R = ring_of_discriminant(Q.disc());
    BQF P = Q;
    if (P.a == 0) {
        // Only possible for square discriminants; move a nonzero value to a.
        IntMatrix g = P.c != 0 ? IntMatrix::mat2(0, -1, 1, 0) : IntMatrix::mat2(1, 0, 1, 1);
        P = sl2_act(P, g);
        if (P.a == 0)
            throw InputError("bqf_to_ideal: form " + Q.to_string() + " is degenerate");
    }
    KElem a1(R, P.a);
    KElem a2(R, -P.b - R.eps, 2, 2);  // (-b - eps)/2 + tau
    return OrientedIdeal(R, a1, a2);
}

BQF ideal_to_bqf(OrientedIdeal const & I)
{
    BigRat n = ideal_norm(I);
    BigRat a = I.b1().norm() / n;
    BigRat b = -(I.b1() * I.b2().conj()).trace() / n;
    BigRat c = I.b2().norm() / n;
    if (a.get_den() != 1 || b.get_den() != 1 || c.get_den() != 1)
        throw InputError("ideal_to_bqf: norm form of " + I.to_string() + " is not integral");
    return BQF{a.get_num(), b.get_num(), c.get_num()};
}

// ---------------------------------------------------------------- Gauss identities

Verdict verify_gauss_identity(BQF const & Q1, BQF const & Q2, BQF const & Q3, GaussBilinearData const & data)
{
    Verdict v;
    auto const &A = data.A, &B = data.B;
    if (A.rows() != 2 || A.cols() != 2 || B.rows() != 2 || B.cols() != 2)
        throw InputError("verify_gauss_identity: bilinear data must be two 2x2 matrices");

    Poly x1 = Poly::var(4, 0), x2 = Poly::var(4, 1), y1 = Poly::var(4, 2), y2 = Poly::var(4, 3);
    Poly xs[2] = {x1, x2}, ys[2] = {y1, y2};
    Poly z1(4), z2(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            z1 += A(i, j) * (xs[i] * ys[j]);
            z2 += B(i, j) * (xs[i] * ys[j]);
        }
    Poly lhs = eval_quadratic(Q1.a, Q1.b, Q1.c, x1, x2) * eval_quadratic(Q2.a, Q2.b, Q2.c, y1, y2);
    Poly rhs = eval_quadratic(Q3.a, Q3.b, Q3.c, z1, z2);
    if (!(lhs == rhs))
        v.fail("Q1(x)Q2(y) != Q3(z1,z2); difference " + (lhs - rhs).to_string());
    v.require(Q1.a == A(0, 0) * B(0, 1) - A(0, 1) * B(0, 0), "Q1(1,0) != a11 b12 - a12 b11");
    v.require(Q2.a == A(0, 0) * B(1, 0) - A(1, 0) * B(0, 0), "Q2(1,0) != a11 b21 - a21 b11");
    return v;
}

}  // namespace hcl

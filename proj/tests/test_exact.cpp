#include "hcl/multiform.hpp"
#include "hcl/poly.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace hcl;
using namespace hcl::testing;

TEST_CASE("floor division and modulus agree with the long-integer definition")
{
    for (long a = -17; a <= 17; ++a)
        for (long b : {-5L, -3L, -1L, 1L, 2L, 4L, 7L}) {
            long q = a / b;
            if ((a % b != 0) && ((a < 0) != (b < 0)))
                --q;
            CHECK(floor_div(a, b) == q);
            BigInt m = mod_floor(a, b);
            CHECK(m >= 0);
            CHECK(m < std::abs(b));
            CHECK(BigInt((a - m) % b) == 0);
        }
}

TEST_CASE("square roots, gcd and rational cube roots")
{
    for (long n = 0; n < 400; ++n) {
        long r = long(std::sqrt(double(n)));
        CHECK(isqrt(n) == r);
        CHECK(is_square(n) == (r * r == n));
    }
    for (int i = 0; i < 200; ++i) {
        BigInt a = uniform(-1000, 1000), b = uniform(-1000, 1000), u, v;
        BigInt g = ext_gcd(a, b, u, v);
        CHECK(g == std::gcd(a.get_si(), b.get_si()));
        CHECK(u * a + v * b == g);
    }
    BigRat out;
    CHECK(rational_cbrt(make_rat(-27, 8), out));
    CHECK(out == make_rat(-3, 2));
    CHECK_FALSE(rational_cbrt(make_rat(2, 1), out));
}

TEST_CASE("parse_bigint rejects malformed text and keeps big values exact")
{
    CHECK(parse_bigint("-123456789012345678901234567890").get_str() == "-123456789012345678901234567890");
    CHECK(parse_bigint("+7") == 7);
    CHECK_THROWS_AS(parse_bigint(""), InputError);
    CHECK_THROWS_AS(parse_bigint("12a"), InputError);
    CHECK_THROWS_AS(parse_bigint("-"), InputError);
}

TEST_CASE("determinant matches the permutation expansion")
{
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = std::size_t(uniform(1, 4));
        IntMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                M(i, j) = uniform(-6, 6);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        BigInt det;
        do {
            int inv = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    inv += p[i] > p[j];
            BigInt term = inv % 2 ? -1 : 1;
            for (std::size_t i = 0; i < n; ++i)
                term *= M(i, p[i]);
            det += term;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(M.det() == det);
    }
}

TEST_CASE("multiform substitution agrees with evaluation at transformed vectors")
{
    for (int trial = 0; trial < 30; ++trial) {
        MultiForm f({2, 3, 2});
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = uniform(-9, 9);
        IntMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m(i, j) = uniform(-4, 4);
        MultiForm g = multiform_substitute(f, 1, m);
        Vec x{uniform(-5, 5), uniform(-5, 5)}, y{uniform(-5, 5), uniform(-5, 5), uniform(-5, 5)},
            z{uniform(-5, 5), uniform(-5, 5)};
        Vec my(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                my[i] += m(i, j) * y[j];
        CHECK(multiform_eval(g, {x, y, z}) == multiform_eval(f, {x, my, z}));
    }
}

TEST_CASE("multiform product evaluates as the product of the factors")
{
    MultiForm f({2, 2}, {1, -2, 3, 5}), g({3}, {4, 0, -1});
    MultiForm h = multiform_mul(f, g);
    CHECK(h.dims() == std::vector<std::size_t>{2, 2, 3});
    Vec a{2, -1}, b{3, 1}, c{1, 2, 7};
    CHECK(multiform_eval(h, {a, b, c}) == multiform_eval(f, {a, b}) * multiform_eval(g, {c}));
}

TEST_CASE("parallel and serial mismatch search agree, including the first index")
{
    for (int trial = 0; trial < 40; ++trial) {
        MultiForm f({3, 4, 5});
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = uniform(-20, 20);
        std::vector<std::size_t> bad;
        int nbad = int(uniform(0, 3));
        for (int k = 0; k < nbad; ++k)
            bad.push_back(std::size_t(uniform(0, long(f.size()) - 1)));
        auto rhs = [&](std::vector<std::size_t> const & t) {
            std::size_t idx = f.flat(t);
            BigInt v = f[idx];
            if (std::find(bad.begin(), bad.end(), idx) != bad.end())
                v += 1;
            return v;
        };
        auto p = find_mismatch(f, rhs), s = find_mismatch_serial(f, rhs);
        REQUIRE(p.has_value() == s.has_value());
        CHECK(p.has_value() == !bad.empty());
        if (p) {
            CHECK(p->tuple == s->tuple);
            CHECK(f.flat(p->tuple) == *std::min_element(bad.begin(), bad.end()));
        }
    }
}

namespace {

BigInt eval_poly(Poly const & p, std::vector<BigInt> const & at)
{
    BigInt s;
    for (auto const & [m, c] : p.terms()) {
        BigInt t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e)
                t *= at[i];
        s += t;
    }
    return s;
}

}  // namespace

TEST_CASE("polynomial arithmetic is a ring homomorphism under evaluation")
{
    for (int trial = 0; trial < 30; ++trial) {
        Poly x = Poly::var(3, 0), y = Poly::var(3, 1), z = Poly::var(3, 2);
        Poly p = BigInt(uniform(-5, 5)) * (x * y) + z - Poly::constant(3, uniform(-3, 3));
        Poly q = x * x - BigInt(uniform(-4, 4)) * (y * z);
        std::vector<BigInt> at{uniform(-6, 6), uniform(-6, 6), uniform(-6, 6)};
        CHECK(eval_poly(p * q, at) == eval_poly(p, at) * eval_poly(q, at));
        CHECK(eval_poly(p - q, at) == eval_poly(p, at) - eval_poly(q, at));
        BigInt pv = eval_poly(p, at);
        CHECK(eval_poly(p.pow(3), at) == pv * pv * pv);
    }
    Poly x = Poly::var(2, 0);
    CHECK((x - x).is_zero());
}

#include "hcl/quadratic_ring.hpp"

#include "hcl/lattice.hpp"

#include <sstream>

namespace hcl {

QuadraticRing ring_of_discriminant(BigInt const & D)
{
    BigInt r = mod_floor(D, 4);
    if (r != 0 && r != 1)
        throw InputError("discriminant " + D.get_str() + " is not 0 or 1 mod 4");
    QuadraticRing ring;
    ring.D = D;
    ring.eps = (r == 1) ? 1 : 0;
    ring.c = (D - ring.eps) / 4;
    return ring;
}

// ---------------------------------------------------------------- KElem

KElem::KElem(QuadraticRing ring, BigInt p, BigInt q, BigInt d)
    : ring_(std::move(ring)), p_(std::move(p)), q_(std::move(q)), d_(std::move(d))
{
    if (d_ == 0)
        throw InputError("KElem with zero denominator");
    normalize();
}

void KElem::normalize()
{
    if (d_ < 0) {
        d_ = -d_;
        p_ = -p_;
        q_ = -q_;
    }
    BigInt g = gcd(gcd(p_, q_), d_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        d_ /= g;
    }
}

KElem KElem::from_rat(QuadraticRing const & ring, BigRat const & r)
{
    return KElem(ring, r.get_num(), 0, r.get_den());
}

KElem KElem::conj() const
{
    // conj(tau) = eps - tau
    return KElem(ring_, p_ + q_ * ring_.eps, -q_, d_);
}

BigRat KElem::norm() const
{
    BigInt n = p_ * p_ + ring_.eps * p_ * q_ - ring_.c * q_ * q_;
    return make_rat(n, d_ * d_);
}

BigRat KElem::trace() const
{
    return make_rat(2 * p_ + ring_.eps * q_, d_);
}

KElem KElem::inverse() const
{
    if (is_zero())
        throw InputError("inverse of zero in K");
    BigRat n = norm();
    return (1 / n) * conj();
}

KElem operator+(KElem const & a, KElem const & b)
{
    if (!(a.ring_ == b.ring_))
        throw InputError("KElem ring mismatch");
    return KElem(a.ring_, a.p_ * b.d_ + b.p_ * a.d_, a.q_ * b.d_ + b.q_ * a.d_, a.d_ * b.d_);
}

KElem operator-(KElem const & a)
{
    return KElem(a.ring_, -a.p_, -a.q_, a.d_);
}

KElem operator-(KElem const & a, KElem const & b)
{
    return a + (-b);
}

KElem operator*(KElem const & a, KElem const & b)
{
    if (!(a.ring_ == b.ring_))
        throw InputError("KElem ring mismatch");
    auto const & R = a.ring_;
    BigInt qq = a.q_ * b.q_;
    BigInt p = a.p_ * b.p_ + R.c * qq;
    BigInt q = a.p_ * b.q_ + b.p_ * a.q_ + R.eps * qq;
    return KElem(R, p, q, a.d_ * b.d_);
}

KElem operator*(BigRat const & s, KElem const & a)
{
    return KElem(a.ring_, s.get_num() * a.p_, s.get_num() * a.q_, s.get_den() * a.d_);
}

std::string KElem::to_string() const
{
    std::ostringstream os;
    bool paren = d_ != 1 && q_ != 0 && p_ != 0;
    if (paren)
        os << '(';
    if (q_ == 0)
        os << p_;
    else {
        if (p_ != 0)
            os << p_ << (q_ > 0 ? "+" : "-");
        else if (q_ < 0)
            os << '-';
        BigInt aq = abs(q_);
        if (aq != 1)
            os << aq << '*';
        os << "tau";
    }
    if (paren)
        os << ')';
    if (d_ != 1)
        os << '/' << d_;
    return os.str();
}

std::vector<KElem> torsion_units(QuadraticRing const & ring)
{
    std::vector<KElem> u{KElem(ring, 1), KElem(ring, -1)};
    if (ring.D == -4) {
        u.push_back(KElem(ring, 0, 1));
        u.push_back(KElem(ring, 0, -1));
    }
    else if (ring.D == -3) {
        u.push_back(KElem(ring, 0, 1));
        u.push_back(KElem(ring, 0, -1));
        u.push_back(KElem(ring, -1, 1));
        u.push_back(KElem(ring, 1, -1));
    }
    return u;
}

// ---------------------------------------------------------------- cube roots

namespace {

// Integer roots of u^3 + a u + b, found by bisection on monotone pieces.
std::vector<BigInt> depressed_cubic_integer_roots(BigInt const & a, BigInt const & b)
{
    auto f = [&](BigInt const & u) -> BigInt { return u * u * u + a * u + b; };
    BigInt bound = 1 + std::max(abs(a), abs(b));

    std::vector<std::pair<BigInt, BigInt>> pieces;
    if (a >= 0)
        pieces.emplace_back(-bound, bound);
    else {
        BigInt k = isqrt(floor_div(-a, 3));
        pieces.emplace_back(-bound, -k - 1);
        pieces.emplace_back(-k, k);
        pieces.emplace_back(k + 1, bound);
    }

    std::vector<BigInt> roots;
    for (auto [lo, hi] : pieces) {
        if (lo > hi)
            continue;
        BigInt flo = f(lo), fhi = f(hi);
        if (flo == 0) {
            roots.push_back(lo);
            continue;
        }
        if (fhi == 0) {
            roots.push_back(hi);
            continue;
        }
        if (sgn(flo) == sgn(fhi))
            continue;
        bool increasing = flo < 0;
        while (hi - lo > 1) {
            BigInt mid = floor_div(lo + hi, 2);
            BigInt fm = f(mid);
            if (fm == 0) {
                roots.push_back(mid);
                break;
            }
            if ((fm < 0) == increasing)
                lo = mid;
            else
                hi = mid;
        }
    }
    return roots;
}

}  // namespace

std::optional<KElem> kelem_cube_root(KElem const & x)
{
    if (x.is_zero())
        return x;
    auto const & R = x.ring();
    if (x.q() == 0) {
        BigRat r;
        if (rational_cbrt(x.rational_part(), r))
            return KElem::from_rat(R, r);
        return std::nullopt;
    }

    BigRat n;
    if (!rational_cbrt(x.norm(), n))
        return std::nullopt;
    // tr(y) = t solves t^3 - 3 n t - tr(x) = 0; with t = u/M the cubic is
    // monic over Z, so its rational roots are integers.
    BigRat T = x.trace();
    BigInt M = lcm(n.get_den(), T.get_den());
    BigRat a_rat = -3 * n * M * M;
    BigRat b_rat = -T * M * M * M;
    BigInt a = a_rat.get_num(), b = b_rat.get_num();
    if (a_rat.get_den() != 1 || b_rat.get_den() != 1)
        throw InternalError("kelem_cube_root: scaled cubic is not integral");

    for (auto const & u : depressed_cubic_integer_roots(a, b)) {
        BigRat t = make_rat(u, M);
        BigRat denom = t * t - n;
        if (denom == 0)
            continue;
        KElem y = (1 / denom) * (x + KElem::from_rat(R, t * n));
        if (y * y * y == x)
            return y;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- ideals

namespace {

struct IntVec2
{
    BigInt x, y;
};

// Canonical Z-basis of the lattice spanned by integer vectors: (g, 0) and
// (b, h) with g, h > 0 and 0 <= b < g. Returns false if the rank is < 2.
bool lattice_hnf(std::vector<IntVec2> vs, BigInt & g, BigInt & b, BigInt & h)
{
    // Euclid on the second coordinate.
    for (;;) {
        std::size_t piv = vs.size();
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i].y != 0 && (piv == vs.size() || abs(vs[i].y) < abs(vs[piv].y)))
                piv = i;
        if (piv == vs.size())
            return false;
        bool done = true;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i == piv || vs[i].y == 0)
                continue;
            BigInt m = floor_div(vs[i].y, vs[piv].y);
            vs[i].x -= m * vs[piv].x;
            vs[i].y -= m * vs[piv].y;
            if (vs[i].y != 0)
                done = false;
        }
        if (done) {
            IntVec2 w = vs[piv];
            if (w.y < 0) {
                w.x = -w.x;
                w.y = -w.y;
            }
            g = 0;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != piv)
                    g = gcd(g, vs[i].x);
            if (g == 0)
                return false;
            h = w.y;
            b = mod_floor(w.x, g);
            return true;
        }
    }
}

BigRat coord_det(KElem const & u, KElem const & v)
{
    return make_rat(u.p() * v.q() - u.q() * v.p(), u.d() * v.d());
}

}  // namespace

OrientedIdeal::OrientedIdeal(QuadraticRing ring, KElem b1, KElem b2)
    : ring_(std::move(ring)), basis_{std::move(b1), std::move(b2)}
{
    if (coord_det(basis_[0], basis_[1]) == 0)
        throw InputError("ideal basis is degenerate");
    KElem t = KElem::tau(ring_);
    if (!contains(t * basis_[0]) || !contains(t * basis_[1]))
        throw InputError("Z-module " + to_string() + " is not closed under multiplication by tau");
}

OrientedIdeal OrientedIdeal::unit(QuadraticRing const & ring)
{
    return OrientedIdeal(ring, KElem(ring, 1), KElem::tau(ring));
}

OrientedIdeal OrientedIdeal::from_generators(QuadraticRing const & ring, std::vector<KElem> const & gens, int mu)
{
    BigInt L = 1;
    for (auto const & e : gens)
        L = lcm(L, e.d());
    std::vector<IntVec2> vs;
    for (auto const & e : gens) {
        BigInt s = L / e.d();
        vs.push_back({e.p() * s, e.q() * s});
    }
    BigInt g, b, h;
    if (!lattice_hnf(vs, g, b, h))
        throw InputError("generators span a degenerate module");
    KElem e1(ring, g, 0, L), e2(ring, b, h, L);
    if (mu >= 0)
        return OrientedIdeal(ring, e1, e2);
    return OrientedIdeal(ring, e2, e1);
}

int OrientedIdeal::mu() const
{
    return sgn(coord_det(basis_[0], basis_[1])) > 0 ? 1 : -1;
}

OrientedIdeal OrientedIdeal::canonical() const
{
    return from_generators(ring_, {basis_[0], basis_[1]}, mu());
}

bool OrientedIdeal::contains(KElem const & x) const
{
    // Solve x = s b1 + t b2 by Cramer's rule and test integrality.
    BigRat det = coord_det(basis_[0], basis_[1]);
    BigRat s = coord_det(x, basis_[1]) / det;
    BigRat t = coord_det(basis_[0], x) / det;
    return s.get_den() == 1 && t.get_den() == 1;
}

bool OrientedIdeal::integral() const
{
    return basis_[0].is_integral() && basis_[1].is_integral();
}

bool OrientedIdeal::same_module(OrientedIdeal const & o) const
{
    if (!(ring_ == o.ring_))
        return false;
    return contains(o.b1()) && contains(o.b2()) && o.contains(b1()) && o.contains(b2());
}

std::string OrientedIdeal::to_string() const
{
    return "<" + basis_[0].to_string() + ", " + basis_[1].to_string() + ">";
}

BigRat ideal_norm(OrientedIdeal const & I)
{
    return coord_det(I.b1(), I.b2());
}

OrientedIdeal ideal_mul(OrientedIdeal const & I, OrientedIdeal const & J)
{
    if (!(I.ring() == J.ring()))
        throw InputError("ideal_mul: ring mismatch");
    return OrientedIdeal::from_generators(
        I.ring(), {I.b1() * J.b1(), I.b1() * J.b2(), I.b2() * J.b1(), I.b2() * J.b2()}, I.mu() * J.mu());
}

OrientedIdeal ideal_scale(KElem const & kappa, OrientedIdeal const & I)
{
    if (kappa.is_zero())
        throw InputError("ideal_scale by zero");
    return OrientedIdeal(I.ring(), kappa * I.b1(), kappa * I.b2());
}

OrientedIdeal ideal_inverse(OrientedIdeal const & I)
{
    BigRat n = ideal_norm(I);
    BigRat s = 1 / abs(n);
    return OrientedIdeal::from_generators(I.ring(), {s * I.b1().conj(), s * I.b2().conj()}, I.mu());
}

static std::optional<KElem> module_generator(OrientedIdeal const & I)
{
    auto const & R = I.ring();
    if (R.D >= 0)
        throw UnsupportedDomain("principal_generator needs D < 0 (got D = " + R.D.get_str() + ")");
    Gram2 gram{I.b1().norm(), (I.b1() * I.b2().conj()).trace(), I.b2().norm()};
    auto red = lagrange_gauss_reduce({Vec2{1, 0}, Vec2{0, 1}}, gram);
    if (red.minimum != abs(ideal_norm(I)))
        return std::nullopt;
    KElem kappa = BigRat(red.b1[0]) * I.b1() + BigRat(red.b1[1]) * I.b2();
    OrientedIdeal K(R, kappa, kappa * KElem::tau(R));
    if (!K.same_module(I))
        throw InternalError("principal_generator: minimal vector does not generate " + I.to_string());
    return kappa;
}

std::optional<KElem> principal_generator(OrientedIdeal const & I)
{
    if (I.ring().D >= 0)
        throw UnsupportedDomain("principal_generator needs D < 0 (got D = " + I.ring().D.get_str() + ")");
    // N(kappa) > 0 for D < 0, so a negatively oriented ideal is never kappa*S.
    if (I.mu() < 0)
        return std::nullopt;
    return module_generator(I);
}

bool ideal_class_equal(OrientedIdeal const & I, OrientedIdeal const & J)
{
    if (!(I.ring() == J.ring()))
        throw InputError("ideal_class_equal: ring mismatch");
    if (I.ring().D >= 0)
        throw UnsupportedDomain("ideal_class_equal needs D < 0; compare reduced forms instead");
    if (I.mu() != J.mu())
        return false;
    OrientedIdeal P = ideal_mul(I, ideal_inverse(J));
    return module_generator(P).has_value();
}

}  // namespace hcl

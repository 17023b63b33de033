#pragma once

// The oriented quadratic ring S(D) = Z[tau], tau^2 = eps*tau + (D - eps)/4,
// elements of K = S (x) Q, and oriented fractional ideals with Z-bases.

#include "hcl/exact.hpp"

#include <array>
#include <optional>

namespace hcl {

struct QuadraticRing
{
    BigInt D;
    int eps = 0;
    BigInt c;  // (D - eps)/4, so tau^2 = eps*tau + c

    friend bool operator==(QuadraticRing const & a, QuadraticRing const & b) { return a.D == b.D; }
};

/// Throws InputError unless D = 0 or 1 mod 4.
QuadraticRing ring_of_discriminant(BigInt const & D);

/// (p + q tau)/d with d > 0 and gcd(p, q, d) = 1.
class KElem
{
    QuadraticRing ring_;
    BigInt p_, q_, d_;
    void normalize();

  public:
    KElem() = default;
    KElem(QuadraticRing ring, BigInt p, BigInt q = 0, BigInt d = 1);

    static KElem tau(QuadraticRing const & ring) { return KElem(ring, 0, 1); }
    static KElem from_rat(QuadraticRing const & ring, BigRat const & r);

    QuadraticRing const & ring() const { return ring_; }
    BigInt const & p() const { return p_; }
    BigInt const & q() const { return q_; }
    BigInt const & d() const { return d_; }
    BigRat rational_part() const { return make_rat(p_, d_); }  // coefficient of 1
    BigRat tau_part() const { return make_rat(q_, d_); }       // coefficient of tau

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_integral() const { return d_ == 1; }

    KElem conj() const;
    BigRat norm() const;
    BigRat trace() const;
    KElem inverse() const;

    friend KElem operator+(KElem const & a, KElem const & b);
    friend KElem operator-(KElem const & a, KElem const & b);
    friend KElem operator-(KElem const & a);
    friend KElem operator*(KElem const & a, KElem const & b);
    friend KElem operator/(KElem const & a, KElem const & b) { return a * b.inverse(); }
    friend KElem operator*(BigRat const & s, KElem const & a);
    friend bool operator==(KElem const & a, KElem const & b)
    {
        return a.ring_ == b.ring_ && a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
    }
    friend bool operator!=(KElem const & a, KElem const & b) { return !(a == b); }

    std::string to_string() const;
};

/// Torsion units of S(D): six for D = -3, four for D = -4, otherwise +-1.
std::vector<KElem> torsion_units(QuadraticRing const & ring);

/// y with y^3 = x, if x is a cube in K.
std::optional<KElem> kelem_cube_root(KElem const & x);

/// Rank-1 oriented fractional ideal. The orientation is the sign of the
/// determinant of the basis coordinates in <1, tau>, so ideal_norm carries it.
class OrientedIdeal
{
    QuadraticRing ring_;
    std::array<KElem, 2> basis_;

  public:
    OrientedIdeal() = default;
    /// Throws InputError if the basis is degenerate or not tau-stable.
    OrientedIdeal(QuadraticRing ring, KElem b1, KElem b2);

    static OrientedIdeal unit(QuadraticRing const & ring);
    /// Canonical basis of the module spanned by `gens` with the given orientation.
    static OrientedIdeal from_generators(QuadraticRing const & ring, std::vector<KElem> const & gens, int mu);

    QuadraticRing const & ring() const { return ring_; }
    KElem const & b1() const { return basis_[0]; }
    KElem const & b2() const { return basis_[1]; }
    int mu() const;

    /// Same module and orientation, with the canonical basis <g, b + h tau>.
    OrientedIdeal canonical() const;
    bool contains(KElem const & x) const;
    /// Every element of the module lies in S.
    bool integral() const;
    bool same_module(OrientedIdeal const & o) const;
    friend bool operator==(OrientedIdeal const & a, OrientedIdeal const & b)
    {
        return a.same_module(b) && a.mu() == b.mu();
    }

    std::string to_string() const;
};

BigRat ideal_norm(OrientedIdeal const & I);
OrientedIdeal ideal_mul(OrientedIdeal const & I, OrientedIdeal const & J);
/// kappa * I; orientation multiplies by sign N(kappa).
OrientedIdeal ideal_scale(KElem const & kappa, OrientedIdeal const & I);
/// Oriented inverse with N(I^-1) = 1/N(I). Assumes I is invertible.
OrientedIdeal ideal_inverse(OrientedIdeal const & I);

/// kappa with I = kappa*S as oriented ideals, or nullopt. D < 0 only.
std::optional<KElem> principal_generator(OrientedIdeal const & I);

/// Oriented class equality for D < 0.
bool ideal_class_equal(OrientedIdeal const & I, OrientedIdeal const & J);

}  // namespace hcl

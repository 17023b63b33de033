#pragma once

#include "hcl/exact.hpp"

#include <array>

namespace hcl {

using Vec2 = std::array<BigInt, 2>;

/// Rational binary quadratic form a v1^2 + b v1 v2 + c v2^2 used as a Gram form.
struct Gram2
{
    BigRat a, b, c;
    BigRat value(Vec2 const & v) const;
    BigRat inner(Vec2 const & u, Vec2 const & v) const;  // polar form, value(v) = inner(v, v)
};

struct ReducedBasis
{
    Vec2 b1, b2;      // value(b1) is the lattice minimum
    BigRat minimum;   // value(b1)
    IntMatrix change; // columns (b1 b2) = columns (input) * change, det = +-1
};

/// Lagrange-Gauss reduction of the lattice spanned by `basis` under a
/// positive definite gram form.
ReducedBasis lagrange_gauss_reduce(std::array<Vec2, 2> const & basis, Gram2 const & gram);

}  // namespace hcl

#include "hcl/lattice.hpp"

#include <utility>

namespace hcl {

BigRat Gram2::value(Vec2 const & v) const
{
    return a * v[0] * v[0] + b * v[0] * v[1] + c * v[1] * v[1];
}

BigRat Gram2::inner(Vec2 const & u, Vec2 const & v) const
{
    BigRat cross = b * (u[0] * v[1] + u[1] * v[0]) / 2;
    return a * u[0] * v[0] + cross + c * u[1] * v[1];
}

ReducedBasis lagrange_gauss_reduce(std::array<Vec2, 2> const & basis, Gram2 const & gram)
{
    if (gram.a <= 0 || gram.b * gram.b - 4 * gram.a * gram.c >= 0)
        throw InputError("lagrange_gauss_reduce: gram form is not positive definite");
    Vec2 u = basis[0], v = basis[1];
    if (u[0] * v[1] - u[1] * v[0] == 0)
        throw InputError("lagrange_gauss_reduce: basis is degenerate");

    IntMatrix t = IntMatrix::identity(2);  // columns track u, v in input coordinates
    auto swap_uv = [&] {
        std::swap(u, v);
        std::swap(t(0, 0), t(0, 1));
        std::swap(t(1, 0), t(1, 1));
    };

    BigRat qu = gram.value(u), qv = gram.value(v);
    if (qu > qv) {
        swap_uv();
        std::swap(qu, qv);
    }
    for (;;) {
        BigInt mu = round_nearest(gram.inner(u, v) / qu);
        if (mu != 0) {
            v[0] -= mu * u[0];
            v[1] -= mu * u[1];
            t(0, 1) -= mu * t(0, 0);
            t(1, 1) -= mu * t(1, 0);
            qv = gram.value(v);
        }
        if (qv >= qu)
            break;
        swap_uv();
        std::swap(qu, qv);
    }
    return ReducedBasis{u, v, qu, t};
}

}  // namespace hcl

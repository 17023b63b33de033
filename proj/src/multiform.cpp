#include "hcl/multiform.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hcl {

static std::size_t product(std::vector<std::size_t> const & dims)
{
    std::size_t n = 1;
    for (auto d : dims) {
        if (d == 0)
            throw InputError("multiform factor of dimension 0");
        n *= d;
    }
    return n;
}

MultiForm::MultiForm(std::vector<std::size_t> dims)
    : dims_(std::move(dims)), coeffs_(product(dims_))
{
}

MultiForm::MultiForm(std::vector<std::size_t> dims, std::vector<BigInt> coeffs)
    : dims_(std::move(dims)), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != product(dims_))
        throw InputError("multiform coefficient count does not match dims");
}

MultiForm MultiForm::constant(BigInt c)
{
    return MultiForm({}, {std::move(c)});
}

std::size_t MultiForm::flat(std::vector<std::size_t> const & idx) const
{
    if (idx.size() != dims_.size())
        throw InputError("multiform index arity mismatch");
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= dims_[i])
            throw InputError("multiform index out of range");
        f = f * dims_[i] + idx[i];
    }
    return f;
}

std::vector<std::size_t> MultiForm::unflat(std::size_t flat_index) const
{
    std::vector<std::size_t> idx(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        idx[i] = flat_index % dims_[i];
        flat_index /= dims_[i];
    }
    return idx;
}

MultiForm & MultiForm::operator+=(MultiForm const & o)
{
    if (dims_ != o.dims_)
        throw InputError("multiform dims mismatch in sum");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

MultiForm & MultiForm::operator-=(MultiForm const & o)
{
    if (dims_ != o.dims_)
        throw InputError("multiform dims mismatch in difference");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

MultiForm operator*(BigInt const & s, MultiForm a)
{
    for (auto & c : a.coeffs_)
        c *= s;
    return a;
}

BigInt multiform_eval(MultiForm const & f, std::vector<Vec> const & vectors)
{
    auto const & dims = f.dims();
    if (vectors.size() != dims.size())
        throw InputError("multiform_eval: expected " + std::to_string(dims.size()) + " vectors");
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (vectors[i].size() != dims[i])
            throw InputError("multiform_eval: vector " + std::to_string(i) + " has wrong length");

    // Contract the last factor first, shrinking the tensor each step.
    std::vector<BigInt> cur = f.coeffs();
    for (std::size_t i = dims.size(); i-- > 0;) {
        std::size_t d = dims[i];
        std::vector<BigInt> next(cur.size() / d);
        for (std::size_t o = 0; o < next.size(); ++o)
            for (std::size_t k = 0; k < d; ++k)
                if (vectors[i][k] != 0)
                    next[o] += cur[o * d + k] * vectors[i][k];
        cur = std::move(next);
    }
    return cur[0];
}

MultiForm multiform_substitute(MultiForm const & f, std::size_t factor, IntMatrix const & m)
{
    auto dims = f.dims();
    if (factor >= dims.size())
        throw InputError("multiform_substitute: factor index out of range");
    if (m.rows() != dims[factor])
        throw InputError("multiform_substitute: matrix has " + std::to_string(m.rows()) +
                         " rows, factor has dimension " + std::to_string(dims[factor]));
    std::size_t old_d = dims[factor], new_d = m.cols();
    std::size_t inner = 1;
    for (std::size_t i = factor + 1; i < dims.size(); ++i)
        inner *= dims[i];
    std::size_t outer = f.size() / (old_d * inner);
    dims[factor] = new_d;
    MultiForm g(dims);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t i = 0; i < old_d; ++i)
            for (std::size_t j = 0; j < new_d; ++j) {
                BigInt const & mij = m(i, j);
                if (mij == 0)
                    continue;
                for (std::size_t r = 0; r < inner; ++r)
                    g[(o * new_d + j) * inner + r] += f[(o * old_d + i) * inner + r] * mij;
            }
    return g;
}

MultiForm multiform_mul(MultiForm const & f, MultiForm const & g)
{
    auto dims = f.dims();
    dims.insert(dims.end(), g.dims().begin(), g.dims().end());
    MultiForm h(dims);
    std::size_t n = g.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            h[i * n + j] = f[i] * g[j];
    }
    return h;
}

std::optional<Mismatch> find_mismatch_serial(MultiForm const & lhs, TupleEvaluator const & rhs)
{
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        auto tuple = lhs.unflat(i);
        BigInt r = rhs(tuple);
        if (r != lhs[i])
            return Mismatch{std::move(tuple), lhs[i], std::move(r)};
    }
    return std::nullopt;
}

std::optional<Mismatch> find_mismatch(MultiForm const & lhs, TupleEvaluator const & rhs)
{
    long const n = static_cast<long>(lhs.size());
    long first = std::numeric_limits<long>::max();

#pragma omp parallel
    {
        long local = std::numeric_limits<long>::max();
#pragma omp for schedule(static)
        for (long i = 0; i < n; ++i) {
            if (i > local)
                continue;
            if (rhs(lhs.unflat(static_cast<std::size_t>(i))) != lhs[static_cast<std::size_t>(i)])
                local = i;
        }
#pragma omp critical
        if (local < first)
            first = local;
    }

    if (first == std::numeric_limits<long>::max())
        return std::nullopt;
    auto idx = static_cast<std::size_t>(first);
    auto tuple = lhs.unflat(idx);
    BigInt r = rhs(tuple);
    return Mismatch{std::move(tuple), lhs[idx], std::move(r)};
}

std::string tuple_to_string(std::vector<std::size_t> const & tuple)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < tuple.size(); ++i)
        os << (i ? "," : "") << 'e' << tuple[i] + 1;
    os << ')';
    return os.str();
}

}  // namespace hcl

#pragma once

// Dense exact multilinear forms and the basis-tuple identity checker.

#include "hcl/exact.hpp"

#include <functional>
#include <optional>

namespace hcl {

/// Multilinear form over factors of the given dimensions. Coefficients are
/// row-major with the last factor varying fastest, so a cube [a111..a222]
/// maps to flat index 4i + 2j + k.
class MultiForm
{
    std::vector<std::size_t> dims_;
    std::vector<BigInt> coeffs_;

  public:
    MultiForm() : coeffs_(1) {}  // the constant form 0 with no factors
    explicit MultiForm(std::vector<std::size_t> dims);
    MultiForm(std::vector<std::size_t> dims, std::vector<BigInt> coeffs);

    static MultiForm constant(BigInt c);

    std::vector<std::size_t> const & dims() const { return dims_; }
    std::vector<BigInt> const & coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    std::size_t arity() const { return dims_.size(); }

    BigInt const & at(std::vector<std::size_t> const & idx) const { return coeffs_[flat(idx)]; }
    BigInt & at(std::vector<std::size_t> const & idx) { return coeffs_[flat(idx)]; }
    BigInt const & operator[](std::size_t flat_index) const { return coeffs_[flat_index]; }
    BigInt & operator[](std::size_t flat_index) { return coeffs_[flat_index]; }

    std::size_t flat(std::vector<std::size_t> const & idx) const;
    std::vector<std::size_t> unflat(std::size_t flat_index) const;

    MultiForm & operator+=(MultiForm const & o);
    MultiForm & operator-=(MultiForm const & o);
    friend MultiForm operator+(MultiForm a, MultiForm const & b) { return a += b; }
    friend MultiForm operator-(MultiForm a, MultiForm const & b) { return a -= b; }
    friend MultiForm operator*(BigInt const & s, MultiForm a);
    friend bool operator==(MultiForm const & a, MultiForm const & b)
    {
        return a.dims_ == b.dims_ && a.coeffs_ == b.coeffs_;
    }
};

using Vec = std::vector<BigInt>;

BigInt multiform_eval(MultiForm const & f, std::vector<Vec> const & vectors);

/// g(..., v, ...) = f(..., m v, ...) in slot `factor`; m is dims[factor] x n.
MultiForm multiform_substitute(MultiForm const & f, std::size_t factor, IntMatrix const & m);

/// Product over disjoint variable groups: dims(f) ++ dims(g).
MultiForm multiform_mul(MultiForm const & f, MultiForm const & g);

/// Evaluate a right-hand side at the basis tuple (e_{i_1}, ..., e_{i_n}).
using TupleEvaluator = std::function<BigInt(std::vector<std::size_t> const &)>;

struct Mismatch
{
    std::vector<std::size_t> tuple;  // zero-based basis indices, one per factor
    BigInt lhs, rhs;
};

/// First basis tuple (in flat order) where lhs's coefficient differs from
/// rhs. For a multilinear rhs, no mismatch means the identity holds.
/// OpenMP-parallel; the result does not depend on the thread count.
std::optional<Mismatch> find_mismatch(MultiForm const & lhs, TupleEvaluator const & rhs);

/// Single-threaded reference for find_mismatch.
std::optional<Mismatch> find_mismatch_serial(MultiForm const & lhs, TupleEvaluator const & rhs);

std::string tuple_to_string(std::vector<std::size_t> const & tuple);

}  // namespace hcl

#pragma once

// Exact integer/rational scalars, small integer matrices and the error types
// shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcl {

using BigInt = mpz_class;
using BigRat = mpq_class;  // canonicalized: lowest terms, positive denominator

/// Malformed or out-of-contract input.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request is well-formed but outside the supported domain (e.g. D > 0 solver paths).
class UnsupportedDomain : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Inputs do not satisfy a group-law precondition (class sum is not the identity).
class NotComposable : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A self-check that should be impossible to fail has failed.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

BigRat make_rat(BigInt num, BigInt den = 1);
BigInt floor_div(const BigInt & a, const BigInt & b);
BigInt mod_floor(const BigInt & a, const BigInt & m);  // result in [0, |m|)
BigInt round_nearest(const BigRat & r);                 // ties toward +inf
int sign(const BigInt & a);
int sign(const BigRat & a);
BigInt gcd(const BigInt & a, const BigInt & b);
BigInt lcm(const BigInt & a, const BigInt & b);
/// Returns g = gcd(a,b) >= 0 and sets u, v with u*a + v*b = g.
BigInt ext_gcd(const BigInt & a, const BigInt & b, BigInt & u, BigInt & v);
bool is_square(const BigInt & n);
BigInt isqrt(const BigInt & n);  // floor(sqrt(n)), n >= 0
/// Exact rational cube root when one exists.
bool rational_cbrt(const BigRat & r, BigRat & out);
std::string to_string(const BigInt & a);
std::string to_string(const BigRat & a);
BigInt parse_bigint(const std::string & s);

/// Dense row-major integer matrix. Small sizes only (2x2 up to 6x6).
class IntMatrix
{
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;

  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix mat2(BigInt a, BigInt b, BigInt c, BigInt d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt & operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    BigInt const & operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    BigInt det() const;  // square matrices up to 4x4 by cofactor expansion

    friend IntMatrix operator*(IntMatrix const & a, IntMatrix const & b);
    friend IntMatrix operator+(IntMatrix const & a, IntMatrix const & b);
    friend IntMatrix operator-(IntMatrix const & a, IntMatrix const & b);
    friend IntMatrix operator*(BigInt const & s, IntMatrix const & a);
    friend bool operator==(IntMatrix const & a, IntMatrix const & b);
    friend bool operator!=(IntMatrix const & a, IntMatrix const & b) { return !(a == b); }

    std::vector<BigInt> apply(std::vector<BigInt> const & v) const;
    std::string to_string() const;
};

/// 2x2 integer matrices: SL2 elements, the L_i matrices, the companion substitution.
using IMat2 = IntMatrix;

}  // namespace hcl

#pragma once

// Small sparse integer polynomials, used only to expand the identities that
// are not multilinear (Gauss, the cubic syzygy, cubic and pair composition).

#include "hcl/exact.hpp"

#include <map>

namespace hcl {

class Poly
{
  public:
    using Monomial = std::vector<unsigned>;

  private:
    std::size_t nvars_ = 0;
    std::map<Monomial, BigInt> terms_;  // no zero coefficients stored

    void add_term(Monomial const & m, BigInt const & c);

  public:
    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, BigInt const & c);
    static Poly var(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    std::map<Monomial, BigInt> const & terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly & operator+=(Poly const & o);
    Poly & operator-=(Poly const & o);
    friend Poly operator+(Poly a, Poly const & b) { return a += b; }
    friend Poly operator-(Poly a, Poly const & b) { return a -= b; }
    friend Poly operator-(Poly a);
    friend Poly operator*(Poly const & a, Poly const & b);
    friend Poly operator*(BigInt const & s, Poly a);
    friend bool operator==(Poly const & a, Poly const & b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Poly pow(unsigned e) const;
    std::string to_string() const;
};

/// Binary quadratic a X^2 + b XY + c Y^2 evaluated at polynomials.
Poly eval_quadratic(BigInt const & a, BigInt const & b, BigInt const & c, Poly const & X, Poly const & Y);

}  // namespace hcl

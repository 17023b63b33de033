#include "hcl/poly.hpp"

#include <sstream>

namespace hcl {

void Poly::add_term(Monomial const & m, BigInt const & c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly Poly::constant(std::size_t nvars, BigInt const & c)
{
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::var(std::size_t nvars, std::size_t i)
{
    if (i >= nvars)
        throw InputError("Poly::var index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    Poly p(nvars);
    p.add_term(m, 1);
    return p;
}

Poly & Poly::operator+=(Poly const & o)
{
    if (nvars_ != o.nvars_)
        throw InputError("Poly variable count mismatch");
    for (auto const & [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly & Poly::operator-=(Poly const & o)
{
    if (nvars_ != o.nvars_)
        throw InputError("Poly variable count mismatch");
    for (auto const & [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly operator-(Poly a)
{
    for (auto & [m, c] : a.terms_)
        c = -c;
    return a;
}

Poly operator*(Poly const & a, Poly const & b)
{
    if (a.nvars_ != b.nvars_)
        throw InputError("Poly variable count mismatch");
    Poly r(a.nvars_);
    Poly::Monomial m(a.nvars_);
    for (auto const & [ma, ca] : a.terms_)
        for (auto const & [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly operator*(BigInt const & s, Poly a)
{
    if (s == 0)
        return Poly(a.nvars_);
    for (auto & [m, c] : a.terms_)
        c *= s;
    return a;
}

Poly Poly::pow(unsigned e) const
{
    Poly r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto const & [m, c] : terms_) {
        os << (first ? "" : " + ") << c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                os << "*v" << i << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
        first = false;
    }
    return os.str();
}

Poly eval_quadratic(BigInt const & a, BigInt const & b, BigInt const & c, Poly const & X, Poly const & Y)
{
    return a * (X * X) + b * (X * Y) + c * (Y * Y);
}

}  // namespace hcl

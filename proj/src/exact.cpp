#include "hcl/exact.hpp"

#include <sstream>

namespace hcl {

BigRat make_rat(BigInt num, BigInt den)
{
    if (den == 0)
        throw InputError("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigInt floor_div(const BigInt & a, const BigInt & b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt & a, const BigInt & m)
{
    BigInt r;
    BigInt am = abs(m);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
    return r;
}

BigInt round_nearest(const BigRat & r)
{
    // floor(r + 1/2)
    BigInt num = 2 * r.get_num() + r.get_den();
    BigInt den = 2 * r.get_den();
    return floor_div(num, den);
}

int sign(const BigInt & a) { return sgn(a); }
int sign(const BigRat & a) { return sgn(a); }

BigInt gcd(const BigInt & a, const BigInt & b)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt & a, const BigInt & b)
{
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

BigInt ext_gcd(const BigInt & a, const BigInt & b, BigInt & u, BigInt & v)
{
    BigInt g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_square(const BigInt & n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt & n)
{
    if (n < 0)
        throw InputError("isqrt of negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

static bool integer_cbrt(const BigInt & n, BigInt & out)
{
    BigInt r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
    if (!exact)
        return false;
    out = r;
    return true;
}

bool rational_cbrt(const BigRat & r, BigRat & out)
{
    BigInt n, d;
    if (!integer_cbrt(r.get_num(), n) || !integer_cbrt(r.get_den(), d))
        return false;
    out = make_rat(n, d);
    return true;
}

std::string to_string(const BigInt & a) { return a.get_str(); }
std::string to_string(const BigRat & a) { return a.get_str(); }

BigInt parse_bigint(const std::string & s)
{
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        throw InputError("not an integer: '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw InputError("not an integer: '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (auto const & r : rows) {
        if (r.size() != cols_)
            throw InputError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mat2(BigInt a, BigInt b, BigInt c, BigInt d)
{
    IntMatrix m(2, 2);
    m(0, 0) = std::move(a);
    m(0, 1) = std::move(b);
    m(1, 0) = std::move(c);
    m(1, 1) = std::move(d);
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

BigInt IntMatrix::det() const
{
    if (rows_ != cols_)
        throw InputError("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0)
        return 1;
    if (n == 1)
        return data_[0];
    if (n == 2)
        return data_[0] * data_[3] - data_[1] * data_[2];
    BigInt total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if ((*this)(0, j) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j)
                    minor(i - 1, c++) = (*this)(i, k);
        BigInt term = (*this)(0, j) * minor.det();
        if (j % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

IntMatrix operator*(IntMatrix const & a, IntMatrix const & b)
{
    if (a.cols_ != b.rows_)
        throw InputError("matrix shape mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix operator+(IntMatrix const & a, IntMatrix const & b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InputError("matrix shape mismatch in sum");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] += b.data_[i];
    return c;
}

IntMatrix operator-(IntMatrix const & a, IntMatrix const & b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InputError("matrix shape mismatch in difference");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

IntMatrix operator*(BigInt const & s, IntMatrix const & a)
{
    IntMatrix c = a;
    for (auto & x : c.data_)
        x *= s;
    return c;
}

bool operator==(IntMatrix const & a, IntMatrix const & b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<BigInt> IntMatrix::apply(std::vector<BigInt> const & v) const
{
    if (v.size() != cols_)
        throw InputError("matrix-vector shape mismatch");
    std::vector<BigInt> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace hcl

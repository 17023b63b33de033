#pragma once

// Binary quadratic forms: SL2 action, reduction, Dirichlet composition,
// class groups, the form/ideal correspondence and Gauss composition identities.

#include "hcl/quadratic_ring.hpp"
#include "hcl/verdict.hpp"

namespace hcl {

/// a x^2 + b xy + c y^2
struct BQF
{
    BigInt a, b, c;

    BigInt disc() const { return b * b - 4 * a * c; }
    BigInt content() const { return gcd(gcd(a, b), c); }
    bool is_primitive() const { return content() == 1; }
    BigInt operator()(BigInt const & x, BigInt const & y) const { return a * x * x + b * x * y + c * y * y; }
    BQF operator-() const { return {-a, -b, -c}; }

    friend bool operator==(BQF const & p, BQF const & q) { return p.a == q.a && p.b == q.b && p.c == q.c; }
    friend bool operator!=(BQF const & p, BQF const & q) { return !(p == q); }
    friend bool operator<(BQF const & p, BQF const & q);
    std::string to_string() const;
};

/// Q^g(x, y) = Q(g11 x + g12 y, g21 x + g22 y). Requires det g = 1.
BQF sl2_act(BQF const & Q, IntMatrix const & g);

BQF principal_form(BigInt const & D);

struct ReducedForm
{
    BQF form;     // canonical representative
    IntMatrix g;  // form == sl2_act(input, g)
};

/// D < 0: the unique reduced form (sign kept for negative definite input).
/// D > 0 non-square: lexicographically least form on the reduced cycle.
ReducedForm reduce(BQF const & Q);
bool is_reduced(BQF const & Q);
bool bqf_equivalent(BQF const & P, BQF const & Q);

/// Reduced cycle containing a reduced indefinite form, starting at Q.
std::vector<BQF> reduced_cycle(BQF const & Q);

/// Composite class of two primitive forms of the same discriminant, reduced.
BQF compose_dirichlet(BQF const & Q1, BQF const & Q2);

struct ClassGroupTable
{
    BigInt D;
    std::vector<BQF> reps;                       // canonical, deterministic order
    std::vector<std::vector<std::size_t>> table; // reps[table[i][j]] ~ reps[i] o reps[j]
    std::size_t identity = 0;
    std::size_t positive_count = 0;  // D < 0: classes of positive definite forms

    std::size_t index_of(BQF const & Q) const;  // throws if not a class of disc D
};

ClassGroupTable enumerate_class_group(BigInt const & D);

/// Exhaustive closure/associativity/identity/inverse check; empty when valid.
std::vector<std::string> check_group_axioms(ClassGroupTable const & G);

/// Ideal <a, (-b - eps)/2 + tau> (after an SL2 move if a = 0) with
/// N(x a1 - y a2)/N(I) = Q(x, y).
OrientedIdeal bqf_to_ideal(BQF const & Q);
/// Q(x, y) = N(x b1 - y b2)/N(I).
BQF ideal_to_bqf(OrientedIdeal const & I);

/// z1 = sum A(i,j) x_i y_j, z2 = sum B(i,j) x_i y_j.
struct GaussBilinearData
{
    IntMatrix A, B;
};

/// Q1(x) Q2(y) = Q3(z1, z2) identically, plus Q1(1,0) = a11 b12 - a12 b11
/// and Q2(1,0) = a11 b21 - a21 b11.
Verdict verify_gauss_identity(BQF const & Q1, BQF const & Q2, BQF const & Q3, GaussBilinearData const & data);

}  // namespace hcl

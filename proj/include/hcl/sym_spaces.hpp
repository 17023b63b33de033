#pragma once

// Binary cubic forms (triply symmetric cubes) and pairs of binary quadratic
// forms with even middle coefficients (doubly symmetric cubes).

#include "hcl/cube.hpp"
#include "hcl/poly.hpp"

namespace hcl {

/// a0 x^3 + 3 a1 x^2 y + 3 a2 x y^2 + a3 y^3
struct BinaryCubic
{
    std::array<BigInt, 4> a;

    BigInt operator()(BigInt const & x, BigInt const & y) const;
    Poly operator()(Poly const & x, Poly const & y) const;

    friend bool operator==(BinaryCubic const & f, BinaryCubic const & g) { return f.a == g.a; }
    friend bool operator!=(BinaryCubic const & f, BinaryCubic const & g) { return !(f == g); }
    std::string to_string() const;
};

Cube cubic_embed(BinaryCubic const & f);
BigInt cubic_disc(BinaryCubic const & f);
/// Inverse of cubic_embed; throws InputError unless A is triply symmetric.
BinaryCubic cubic_from_cube(Cube const & A);
bool is_triply_symmetric(Cube const & A);

/// Read off companion_cube(A_f).
BinaryCubic cubic_companion(BinaryCubic const & f);
/// 2 f' + eps f, the doubled cubicovariant.
BinaryCubic cubicovariant(BinaryCubic const & f);
/// The common associated form of A_f.
BQF cubic_quadratic_form(BinaryCubic const & f);

/// f'^2 + eps f f' - ((D - eps)/4) f^2 = Q_f(x, -y)^3 as polynomials.
bool syzygy_check(BinaryCubic const & f);

BinaryCubic cubic_identity(BigInt const & D);
/// f(-x, y); A_{f~} is the cube_tilde of A_f.
BinaryCubic cubic_tilde(BinaryCubic const & f);

/// (g*h)((x,y);(u,v)) = f(R^s((x,y),(u,v))) as polynomials, Q1^R = Q^f,
/// Q2^R = Q^g, Q^g(1,0) Q^h(1,0) = Q^f(r211, r111) and disc R = D.
Verdict verify_cubic_composition(BinaryCubic const & f, BinaryCubic const & g, BinaryCubic const & h,
                                 Cube const & R);

/// (S, I, delta) with I = <alpha, beta>, alpha = a'1 + a1 tau,
/// beta = a'2 + a2 tau and delta = alpha beta, so that
/// (x alpha + y beta)^3 = delta (f'(x,y) + f(x,y) tau).
struct CubicTriple
{
    QuadraticRing ring;
    OrientedIdeal ideal;
    KElem delta;
};

/// D < 0, projective. If alpha, beta are dependent for f itself, an
/// SL2-equivalent form is used (same class).
CubicTriple cubic_to_triple(BinaryCubic const & f);
/// a_k = tau-part of alpha^(3-k) beta^k / delta on the canonical basis of I.
BinaryCubic triple_to_cubic(CubicTriple const & T);

struct CubicComposite
{
    CubicTriple triple;  // (I_f I_g, delta_f delta_g)
    BinaryCubic form;    // a representative of [f] + [g]
};

CubicComposite cubic_class_compose(BinaryCubic const & f, BinaryCubic const & g);

/// [f] + [g] + [h] = [id]: the cube classes sum to the identity and
/// delta_f delta_g delta_h is a cube in K. D < 0 only.
Verdict cubic_classes_sum_to_identity(BinaryCubic const & f, BinaryCubic const & g, BinaryCubic const & h);

/// F = (F1, F2) with F1 = a x^2 + 2b xy + c y^2, F2 = d x^2 + 2e xy + f y^2.
struct PairBQF
{
    BQF F1, F2;

    PairBQF() = default;
    /// Throws InputError on an odd middle coefficient.
    PairBQF(BQF f1, BQF f2);

    /// x1 F1(y) + x2 F2(y)
    Poly operator()(Poly const & x1, Poly const & x2, Poly const & y1, Poly const & y2) const;

    friend bool operator==(PairBQF const & p, PairBQF const & q) { return p.F1 == q.F1 && p.F2 == q.F2; }
    friend bool operator!=(PairBQF const & p, PairBQF const & q) { return !(p == q); }
    std::string to_string() const;
};

Cube pair_embed(PairBQF const & F);
BigInt pair_disc(PairBQF const & F);
bool is_doubly_symmetric(Cube const & A);
PairBQF pair_from_cube(Cube const & A);
PairBQF pair_identity(BigInt const & D);
PairBQF pair_companion(PairBQF const & F);

/// A pair in the class [F] + [G]: compose the Q2 classes to I, then read
/// the doubly symmetric cube off the triple (I^-2, I, I).
PairBQF pair_class_compose(PairBQF const & F, PairBQF const & G);

/// Map applied to S in the second slot of the pair identity.
enum class PairSlot
{
    plain,  // F(R^s(x,u), S(y,v))
    sigma,  // F(R^s(x,u), S^s(y,v))
};

/// The convention under which the bundled worked example holds.
inline constexpr PairSlot default_pair_slot = PairSlot::sigma;

/// (G*H)((x,y);(u,v)) = F(R^s(x,u), S'(y,v)) as polynomials, with S' per
/// `slot`, plus Q1^R = Q1^F, Q2^R = Q1^G and the two corner equations.
Verdict verify_pair_composition(PairBQF const & F, PairBQF const & G, PairBQF const & H, Cube const & R,
                                Cube const & S, PairSlot slot = default_pair_slot);

}  // namespace hcl

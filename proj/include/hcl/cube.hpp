#pragma once

// 2x2x2 integer cubes: associated forms, the Gamma-action, companions, form
// products, the cube <-> balanced triple correspondence, and the explicit
// composition identity with dual cubes.

#include "hcl/bqf.hpp"
#include "hcl/multiform.hpp"

#include <array>

namespace hcl {

/// Coefficients [a111, a112, a121, a122, a211, a212, a221, a222].
struct Cube
{
    std::array<BigInt, 8> a;

    Cube() = default;
    Cube(std::initializer_list<long> v);
    explicit Cube(std::array<BigInt, 8> v) : a(std::move(v)) {}

    /// Zero-based (i, j, k).
    BigInt & operator()(int i, int j, int k) { return a[4 * i + 2 * j + k]; }
    BigInt const & operator()(int i, int j, int k) const { return a[4 * i + 2 * j + k]; }

    MultiForm trilinear() const;
    static Cube from_trilinear(MultiForm const & f);

    friend bool operator==(Cube const & x, Cube const & y) { return x.a == y.a; }
    friend bool operator!=(Cube const & x, Cube const & y) { return !(x == y); }
    std::string to_string() const;
};

/// Q_i^A(x, y) = -det(M_i x - N_i y) for i = 1, 2, 3.
std::array<BQF, 3> assoc_forms(Cube const & A);
BigInt cube_disc(Cube const & A);
bool is_projective(Cube const & A);

/// Factor f of A is replaced by (g_f)^T, so (M1, N1) -> (p M1 + q N1, r M1 + s N1)
/// for g1 = [[p, q], [r, s]].
Cube gamma_act(Cube const & A, IntMatrix const & g1, IntMatrix const & g2, IntMatrix const & g3);

Cube cube_iota(Cube const & A);   // swap front and back faces
Cube cube_sigma(Cube const & A);  // iota, then negate the new front face
Cube cube_tilde(Cube const & A);  // [-a, b, c, -d, e, -f, -g, h]

/// L_i^A = [[(q_i - eps)/2, -r_i], [p_i, (-q_i - eps)/2]] from Q_i^A = (p_i, q_i, r_i).
IntMatrix l_matrix(Cube const & A, int i);
/// A'(x, y, z) = A(L_1 x, y, z).
Cube companion_cube(Cube const & A);
/// Companion computed through L_i on factor i (all three must agree).
Cube companion_via(Cube const & A, int factor);

/// A(x,y,z) B'(u,v,w) + A'(x,y,z) B(u,v,w) + eps A(x,y,z) B(u,v,w).
MultiForm form_product(Cube const & A, Cube const & B);

Cube identity_cube(BigInt const & D);

/// (A(e1, y, z), A(e2, y, z)).
std::array<BigInt, 2> bilinear_pair(Cube const & A, Vec const & y, Vec const & z);

struct LemmermeyerInstance
{
    std::array<BQF, 3> forms;  // Q2^A(x,-y), Q3^A(x,-y), Q1^A
    GaussBilinearData data;    // z1 from N1, z2 from M1
    Verdict verdict;
};

/// Q2^A(x2,-y2) Q3^A(x3,-y3) = Q1^A(x1, y1) as a Gauss composition instance.
LemmermeyerInstance lemmermeyer_identity(Cube const & A);

/// Three oriented ideals with ordered bases (alpha, beta, gamma).
struct BalancedTriple
{
    QuadraticRing ring;
    std::array<OrientedIdeal, 3> ideals;
};

/// Checks alpha_i beta_j gamma_k = a'_ijk + a_ijk tau, balancedness,
/// the norm-form law and the product law for every factor.
Verdict check_triple(Cube const & A, BalancedTriple const & T);

/// The triple with bases alpha1 = a'111 + a111 tau, alpha2 = a'211 + a211 tau,
/// beta1 = a'212 + a212 tau, beta2 = a'222 + a222 tau, gamma1 = 1/beta1,
/// gamma2 = 1/alpha2. Zero-norm corners are avoided by a unipotent
/// Gamma-move whose effect on the bases is undone afterwards.
BalancedTriple cube_to_triple(Cube const & A);

/// tau-coefficients of the eight products alpha_i beta_j gamma_k.
Cube triple_to_cube(BalancedTriple const & T);

/// Representative of [A] + [B] (D < 0).
Cube cube_class_compose(Cube const & A, Cube const & B);

struct DualWitness
{
    Cube R, S, T;
};

/// Dual cubes for [A] + [B] + [C] = [id] (D < 0). Throws NotComposable otherwise.
DualWitness dual_cubes_solve(Cube const & A, Cube const & B, Cube const & C);

/// Q_i^{T_j} = Q_j^{A_i} for all i, j, coefficient for coefficient.
Verdict check_duality(std::array<Cube, 3> const & A, std::array<Cube, 3> const & T);

/// (B*C)(x,y,z;u,v,w) = A(R^s(x,u), S^s(y,v), T^s(z,w)) on all basis tuples,
/// Q1^R = Q1^A, Q2^R = Q1^B, the three corner product equations and equal
/// discriminants.
Verdict verify_cube_composition(Cube const & A, Cube const & B, Cube const & C, Cube const & R, Cube const & S,
                                Cube const & T);

/// The alternative form (B*C) = A~(R^i(x,u), S^i(y,v), T^i(z,w)).
Verdict verify_cube_composition_tilde(Cube const & A, Cube const & B, Cube const & C, Cube const & R,
                                      Cube const & S, Cube const & T);

}  // namespace hcl

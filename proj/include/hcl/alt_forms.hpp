#pragma once

// Pairs of quaternary alternating 2-forms and senary alternating 3-forms,
// both reached from cubes, with their companion forms and composition
// identities.

#include "hcl/cube.hpp"

namespace hcl {

/// Two 4x4 alternating integer matrices; F(x, y, z) = x1 y^T F1 z + x2 y^T F2 z.
struct QuatAltPair
{
    IntMatrix F1, F2;

    QuatAltPair() : F1(4, 4), F2(4, 4) {}
    /// Throws InputError unless both matrices are 4x4 and alternating.
    QuatAltPair(IntMatrix f1, IntMatrix f2);

    /// dims [2, 4, 4]
    MultiForm trilinear() const;

    friend bool operator==(QuatAltPair const & p, QuatAltPair const & q) { return p.F1 == q.F1 && p.F2 == q.F2; }
    friend bool operator!=(QuatAltPair const & p, QuatAltPair const & q) { return !(p == q); }
    std::string to_string() const;
};

bool is_alternating(IntMatrix const & M);

/// ([0, M; -M^T, 0], [0, N; -N^T, 0]) with M = A(e1, ., .), N = A(e2, ., .).
QuatAltPair phi(Cube const & A);

/// m12 m34 - m13 m24 + m14 m23. Throws InputError on non-alternating input.
BigInt pfaffian(IntMatrix const & M);
/// Pf(F1 x - F2 y); equals Q1^A on phi(A).
BQF pair_pfaffian_form(QuatAltPair const & P);
BigInt pair_disc(QuatAltPair const & P);
/// F'(x, y, z) = F(L x, y, z), L built from the Pfaffian form as for cubes.
QuatAltPair pair_companion(QuatAltPair const & P);

/// F(x,y,z) G'(u,v,w) + F'(x,y,z) G(u,v,w) + eps F(x,y,z) G(u,v,w), dims [2,4,4,2,4,4].
MultiForm pair_form_product(QuatAltPair const & F, QuatAltPair const & G);

/// With F, G, H = phi(A), phi(B), phi(C):
/// (G*H)(x,y,z;u,v,w) = F(R^s(x,u), (S^s(y1,v1) + T^s(y2,v2), S^s(y1,w1) + T^s(y2,w2)),
///                                  (S^s(z1,v1) + T^s(z2,v2), S^s(z1,w1) + T^s(z2,w2)))
/// on all basis tuples, plus Q1^R = Q1^A, Q2^R = Q1^B, the three corner
/// equations and equal discriminants. Throws InputError unless A is doubly
/// symmetric.
Verdict verify_quaternary_composition(Cube const & A, Cube const & B, Cube const & C, Cube const & R,
                                      Cube const & S, Cube const & T);

/// Alternating 3-form on Z^6 stored by its 20 coefficients a_ijk, i < j < k,
/// in lexicographic order; E(e_i, e_j, e_k) = a_ijk.
struct SenaryAlt3
{
    std::array<BigInt, 20> a;

    static std::size_t index(int i, int j, int k);  // zero-based, i < j < k
    /// Coefficient at any index triple, with the alternating sign.
    BigInt coefficient(int i, int j, int k) const;
    BigInt operator()(Vec const & x, Vec const & y, Vec const & z) const;
    /// Full alternating extension, dims [6, 6, 6].
    MultiForm trilinear() const;

    friend bool operator==(SenaryAlt3 const & e, SenaryAlt3 const & f) { return e.a == f.a; }
    friend bool operator!=(SenaryAlt3 const & e, SenaryAlt3 const & f) { return !(e == f); }
    std::string to_string() const;
};

/// sum a_ijk e_i ^ e_{2+j} ^ e_{4+k}: factor i of the cube lands in
/// coordinates 2i, 2i+1.
SenaryAlt3 wedge222(Cube const & A);

struct SenaryPair
{
    SenaryAlt3 E, Ep;  // tau part and tau-free part
};

/// det(alpha_i, alpha_j, alpha_k) = a'_ijk + a_ijk tau over S^3 with basis
/// (1,0,0), (tau,0,0), (0,1,0), (0,tau,0), (0,0,1), (0,0,tau).
SenaryPair senary_identity_pair(BigInt const & D);

/// [1, 0, 0, (D - eps)/4, 0, 1, 1, eps]
Cube senary_identity_cube(BigInt const & D);

/// How R turns the block coordinates (x_i, u_i) into a vector of Z^2.
enum class SenaryBilinear
{
    product,  // (R(e1, x, u), R(e2, x, u)): the coordinates of (x1 + x2 tau)(u1 + u2 tau)
    iota,     // the same pair read off cube_iota(R)
};

/// E1(x,y,z) E2'(u,v,w) + E1'(x,y,z) E2(u,v,w) + eps E1(x,y,z) E2(u,v,w).
MultiForm senary_form_product(SenaryPair const & P1, SenaryPair const & P2, int eps);

/// Basis-tuple evaluator for E(a, b, c), with a = (sum_i R(x_i, u_i), sum_i R(y_i, u_i), sum_i R(z_i, u_i))
/// and b, c likewise from v and w.
TupleEvaluator senary_rhs(SenaryAlt3 const & E, Cube const & R, SenaryBilinear mode);

/// (E*E) = E(a, b, c) for E = E_id,D on all 6^6 basis tuples.
Verdict verify_senary_identity(BigInt const & D, SenaryBilinear mode = SenaryBilinear::product);
/// Same with a caller-supplied R.
Verdict verify_senary_identity_with(BigInt const & D, Cube const & R, SenaryBilinear mode);

}  // namespace hcl

#include "hcl/alt_forms.hpp"

#include <sstream>

namespace hcl {

namespace {

int eps_of(BigInt const & D)
{
    return mod_floor(D, 4) == 1 ? 1 : 0;
}

// (P(e1, a, b), P(e2, a, b)) for a, b in Z^2
Vec bilinear_vec(Cube const & P, Vec const & a, Vec const & b)
{
    auto r = bilinear_pair(P, a, b);
    return {r[0], r[1]};
}

// P^s(a, b) = (-P(e2, a, b), P(e1, a, b))
Vec sigma_vec(Cube const & P, Vec const & a, Vec const & b)
{
    auto r = bilinear_pair(P, a, b);
    return {-r[1], r[0]};
}

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec slice(Vec const & v, std::size_t from, std::size_t len)
{
    return Vec(v.begin() + long(from), v.begin() + long(from + len));
}

}  // namespace

// ---------------------------------------------------------------- quaternary pairs

bool is_alternating(IntMatrix const & M)
{
    if (M.rows() != M.cols())
        return false;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (M(i, j) != -M(j, i))
                return false;
    return true;
}

QuatAltPair::QuatAltPair(IntMatrix f1, IntMatrix f2) : F1(std::move(f1)), F2(std::move(f2))
{
    for (auto const * M : {&F1, &F2})
        if (M->rows() != 4 || M->cols() != 4 || !is_alternating(*M))
            throw InputError("a quaternary alternating pair needs two alternating 4x4 matrices");
}

MultiForm QuatAltPair::trilinear() const
{
    MultiForm f({2, 4, 4});
    IntMatrix const * M[2] = {&F1, &F2};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                f.at({i, j, k}) = (*M[i])(j, k);
    return f;
}

std::string QuatAltPair::to_string() const
{
    return "(" + F1.to_string() + ", " + F2.to_string() + ")";
}

QuatAltPair phi(Cube const & A)
{
    IntMatrix F[2] = {IntMatrix(4, 4), IntMatrix(4, 4)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                F[i](j, 2 + k) = A(i, j, k);
                F[i](2 + k, j) = -A(i, j, k);
            }
    return QuatAltPair(F[0], F[1]);
}

BigInt pfaffian(IntMatrix const & M)
{
    if (M.rows() != 4 || M.cols() != 4 || !is_alternating(M))
        throw InputError("pfaffian needs an alternating 4x4 matrix");
    return M(0, 1) * M(2, 3) - M(0, 2) * M(1, 3) + M(0, 3) * M(1, 2);
}

BQF pair_pfaffian_form(QuatAltPair const & P)
{
    // Pf is quadratic in the entries, so its x y coefficient is read off at x = y = 1.
    BigInt p = pfaffian(P.F1), r = pfaffian(P.F2);
    BigInt q = pfaffian(P.F1 - P.F2) - p - r;
    return {p, q, r};
}

BigInt pair_disc(QuatAltPair const & P)
{
    return pair_pfaffian_form(P).disc();
}

QuatAltPair pair_companion(QuatAltPair const & P)
{
    BQF Q = pair_pfaffian_form(P);
    int eps = eps_of(Q.disc());
    IntMatrix L = IntMatrix::mat2((Q.b - eps) / 2, -Q.c, Q.a, (-Q.b - eps) / 2);
    return QuatAltPair(L(0, 0) * P.F1 + L(1, 0) * P.F2, L(0, 1) * P.F1 + L(1, 1) * P.F2);
}

MultiForm pair_form_product(QuatAltPair const & F, QuatAltPair const & G)
{
    BigInt D = pair_disc(F);
    if (pair_disc(G) != D)
        throw InputError("pair_form_product: discriminants differ");
    MultiForm f = F.trilinear(), g = G.trilinear();
    MultiForm out =
        multiform_mul(f, pair_companion(G).trilinear()) + multiform_mul(pair_companion(F).trilinear(), g);
    if (eps_of(D))
        out += multiform_mul(f, g);
    return out;
}

Verdict verify_quaternary_composition(Cube const & A, Cube const & B, Cube const & C, Cube const & R,
                                      Cube const & S, Cube const & T)
{
    if (A.a[1] != A.a[2] || A.a[5] != A.a[6])
        throw InputError("verify_quaternary_composition: A = " + A.to_string() + " is not doubly symmetric");
    Verdict v;
    BigInt D = cube_disc(A);
    if (cube_disc(B) != D || cube_disc(C) != D) {
        v.fail("A, B, C have different discriminants");
        return v;
    }
    Cube const * W[3] = {&R, &S, &T};
    char const * names[3] = {"R", "S", "T"};
    for (int i = 0; i < 3; ++i)
        v.require(cube_disc(*W[i]) == D, std::string("disc(") + names[i] + ") = " + cube_disc(*W[i]).get_str() +
                                             ", expected " + D.get_str());

    auto QA = assoc_forms(A), QB = assoc_forms(B), QC = assoc_forms(C), QR = assoc_forms(R);
    v.require(QR[0] == QA[0], "Q1(R) = " + QR[0].to_string() + " differs from Q1(A) = " + QA[0].to_string());
    v.require(QR[1] == QB[0], "Q2(R) = " + QR[1].to_string() + " differs from Q1(B) = " + QB[0].to_string());
    for (int i = 0; i < 3; ++i) {
        BigInt l = QB[i].a * QC[i].a, r = QA[i]((*W[i])(1, 0, 0), (*W[i])(0, 0, 0));
        v.require(l == r, "Q" + std::to_string(i + 1) + "(B)(1,0) Q" + std::to_string(i + 1) + "(C)(1,0) = " +
                              l.get_str() + " but Q" + std::to_string(i + 1) + "(A) at the corner = " + r.get_str());
    }

    QuatAltPair F = phi(A), G = phi(B), H = phi(C);
    // The right side is multilinear only because F has zero diagonal 2x2 blocks.
    for (auto const * M : {&F.F1, &F.F2})
        for (int b = 0; b < 4; b += 2)
            v.require((*M)(b, b + 1) == 0, "phi(A) has a nonzero diagonal block");

    MultiForm lhs = pair_form_product(G, H);
    MultiForm f = F.trilinear();
    auto mm = find_mismatch(lhs, [&](std::vector<std::size_t> const & t) {
        Vec x = unit_vec(2, t[0]), y = unit_vec(4, t[1]), z = unit_vec(4, t[2]);
        Vec u = unit_vec(2, t[3]), vv = unit_vec(4, t[4]), w = unit_vec(4, t[5]);
        Vec y1 = slice(y, 0, 2), y2 = slice(y, 2, 2), z1 = slice(z, 0, 2), z2 = slice(z, 2, 2);
        Vec v1 = slice(vv, 0, 2), v2 = slice(vv, 2, 2), w1 = slice(w, 0, 2), w2 = slice(w, 2, 2);
        auto half = [&](Vec const & p1, Vec const & p2, Vec const & q1, Vec const & q2) {
            Vec s = sigma_vec(S, p1, q1), t2 = sigma_vec(T, p2, q2);
            return Vec{s[0] + t2[0], s[1] + t2[1]};
        };
        Vec Yv = half(y1, y2, v1, v2), Yw = half(y1, y2, w1, w2);
        Vec Zv = half(z1, z2, v1, v2), Zw = half(z1, z2, w1, w2);
        return multiform_eval(f, {sigma_vec(R, x, u), Vec{Yv[0], Yv[1], Yw[0], Yw[1]},
                                  Vec{Zv[0], Zv[1], Zw[0], Zw[1]}});
    });
    if (mm) {
        v.fail("(G*H) differs from the right side at " + tuple_to_string(mm->tuple) + ": " + mm->lhs.get_str() +
               " vs " + mm->rhs.get_str());
        v.mismatch = mm;
    }
    return v;
}

// ---------------------------------------------------------------- senary forms

std::size_t SenaryAlt3::index(int i, int j, int k)
{
    if (!(0 <= i && i < j && j < k && k < 6))
        throw InputError("senary index needs 0 <= i < j < k < 6");
    std::size_t n = 0;
    for (int p = 0; p < 6; ++p)
        for (int q = p + 1; q < 6; ++q)
            for (int r = q + 1; r < 6; ++r, ++n)
                if (p == i && q == j && r == k)
                    return n;
    return n;  // not reached
}

BigInt SenaryAlt3::coefficient(int i, int j, int k) const
{
    if (i == j || j == k || i == k)
        return 0;
    int idx[3] = {i, j, k};
    int sign = 1;
    // bubble sort, tracking the permutation parity
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q + 1 < 3 - p; ++q)
            if (idx[q] > idx[q + 1]) {
                std::swap(idx[q], idx[q + 1]);
                sign = -sign;
            }
    BigInt c = a[index(idx[0], idx[1], idx[2])];
    return sign > 0 ? c : BigInt(-c);
}

BigInt SenaryAlt3::operator()(Vec const & x, Vec const & y, Vec const & z) const
{
    BigInt s;
    std::size_t n = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k, ++n) {
                if (a[n] == 0)
                    continue;
                BigInt det = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                             x[k] * (y[i] * z[j] - y[j] * z[i]);
                s += a[n] * det;
            }
    return s;
}

MultiForm SenaryAlt3::trilinear() const
{
    MultiForm f({6, 6, 6});
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k)
                f.at({i, j, k}) = coefficient(int(i), int(j), int(k));
    return f;
}

std::string SenaryAlt3::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.size(); ++i)
        os << (i ? "," : "") << a[i];
    os << ']';
    return os.str();
}

SenaryAlt3 wedge222(Cube const & A)
{
    SenaryAlt3 E;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                E.a[SenaryAlt3::index(i, 2 + j, 4 + k)] = A(i, j, k);
    return E;
}

SenaryPair senary_identity_pair(BigInt const & D)
{
    if (D == 0)
        throw InputError("senary_identity_pair: D must be nonzero");
    auto R = ring_of_discriminant(D);
    KElem zero(R, 0), one(R, 1), tau = KElem::tau(R);
    std::array<std::array<KElem, 3>, 6> basis;
    for (int b = 0; b < 3; ++b) {
        basis[2 * b].fill(zero);
        basis[2 * b + 1].fill(zero);
        basis[2 * b][b] = one;
        basis[2 * b + 1][b] = tau;
    }
    auto det3 = [](std::array<KElem, 3> const & x, std::array<KElem, 3> const & y, std::array<KElem, 3> const & z) {
        return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
               x[2] * (y[0] * z[1] - y[1] * z[0]);
    };
    SenaryPair P;
    std::size_t n = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k, ++n) {
                KElem d = det3(basis[i], basis[j], basis[k]);
                if (!d.is_integral())
                    throw InternalError("senary_identity_pair: determinant outside S");
                P.Ep.a[n] = d.p();
                P.E.a[n] = d.q();
            }
    return P;
}

Cube senary_identity_cube(BigInt const & D)
{
    auto R = ring_of_discriminant(D);
    return Cube(std::array<BigInt, 8>{1, 0, 0, R.c, 0, 1, 1, R.eps});
}

MultiForm senary_form_product(SenaryPair const & P1, SenaryPair const & P2, int eps)
{
    MultiForm e1 = P1.E.trilinear(), e2 = P2.E.trilinear();
    MultiForm out = multiform_mul(e1, P2.Ep.trilinear()) + multiform_mul(P1.Ep.trilinear(), e2);
    if (eps)
        out += multiform_mul(e1, e2);
    return out;
}

TupleEvaluator senary_rhs(SenaryAlt3 const & E, Cube const & R, SenaryBilinear mode)
{
    Cube Rm = mode == SenaryBilinear::iota ? cube_iota(R) : R;
    return [E, Rm](std::vector<std::size_t> const & t) {
        Vec in[6];
        for (int s = 0; s < 6; ++s)
            in[s] = unit_vec(6, t[s]);
        // out[o] collects the block sums for u, v, w (o = 0, 1, 2)
        Vec out[3];
        for (int o = 0; o < 3; ++o) {
            Vec const & right = in[3 + o];
            Vec acc(6);
            for (int blk = 0; blk < 3; ++blk) {  // x, y, z
                Vec sum{0, 0};
                for (int i = 0; i < 3; ++i) {
                    Vec p = bilinear_vec(Rm, slice(in[blk], 2 * i, 2), slice(right, 2 * i, 2));
                    sum[0] += p[0];
                    sum[1] += p[1];
                }
                acc[2 * blk] = sum[0];
                acc[2 * blk + 1] = sum[1];
            }
            out[o] = acc;
        }
        return E(out[0], out[1], out[2]);
    };
}

Verdict verify_senary_identity_with(BigInt const & D, Cube const & R, SenaryBilinear mode)
{
    Verdict v;
    SenaryPair P = senary_identity_pair(D);
    SenaryAlt3 Eid = wedge222(identity_cube(D));
    v.require(P.E == Eid, "tau-part of the determinant construction " + P.E.to_string() +
                              " differs from wedge222(A_id) = " + Eid.to_string());
    v.notes.push_back(mode == SenaryBilinear::product ? "blocks combined by the ring product coordinates"
                                                      : "blocks combined through cube_iota(R)");
    MultiForm lhs = senary_form_product(P, P, eps_of(D));
    auto mm = find_mismatch(lhs, senary_rhs(P.E, R, mode));
    if (mm) {
        v.fail("(E*E) differs from E(a,b,c) at " + tuple_to_string(mm->tuple) + ": " + mm->lhs.get_str() + " vs " +
               mm->rhs.get_str());
        v.mismatch = mm;
    }
    return v;
}

Verdict verify_senary_identity(BigInt const & D, SenaryBilinear mode)
{
    return verify_senary_identity_with(D, senary_identity_cube(D), mode);
}

}  // namespace hcl

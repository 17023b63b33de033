#include "hcl/cube.hpp"

#include <sstream>

namespace hcl {

Cube::Cube(std::initializer_list<long> v)
{
    if (v.size() != 8)
        throw InputError("a cube has 8 coefficients, got " + std::to_string(v.size()));
    std::size_t i = 0;
    for (long x : v)
        a[i++] = x;
}

MultiForm Cube::trilinear() const
{
    return MultiForm({2, 2, 2}, std::vector<BigInt>(a.begin(), a.end()));
}

Cube Cube::from_trilinear(MultiForm const & f)
{
    if (f.dims() != std::vector<std::size_t>{2, 2, 2})
        throw InputError("from_trilinear: form is not 2x2x2");
    Cube c;
    for (std::size_t i = 0; i < 8; ++i)
        c.a[i] = f[i];
    return c;
}

std::string Cube::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < 8; ++i)
        os << (i ? "," : "") << a[i];
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------- forms

namespace {

// -det(M x - N y) for 2x2 slices given as m[r][c], n[r][c].
BQF slice_form(BigInt const (&m)[2][2], BigInt const (&n)[2][2])
{
    BigInt p = -(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    BigInt r = -(n[0][0] * n[1][1] - n[0][1] * n[1][0]);
    BigInt q = m[0][0] * n[1][1] + n[0][0] * m[1][1] - m[0][1] * n[1][0] - n[0][1] * m[1][0];
    return {p, q, r};
}

}  // namespace

std::array<BQF, 3> assoc_forms(Cube const & A)
{
    std::array<BQF, 3> out;
    for (int f = 0; f < 3; ++f) {
        BigInt m[2][2], n[2][2];
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                int idx[3];
                // slice index on factor f; the two others fill (r, c) in order
                int o = 0;
                for (int g = 0; g < 3; ++g)
                    if (g != f)
                        idx[g] = (o++ == 0) ? r : c;
                idx[f] = 0;
                m[r][c] = A(idx[0], idx[1], idx[2]);
                idx[f] = 1;
                n[r][c] = A(idx[0], idx[1], idx[2]);
            }
        out[f] = slice_form(m, n);
    }
    BigInt D = out[0].disc();
    if (out[1].disc() != D || out[2].disc() != D)
        throw InternalError("associated forms of " + A.to_string() + " have different discriminants");
    return out;
}

BigInt cube_disc(Cube const & A)
{
    return assoc_forms(A)[0].disc();
}

bool is_projective(Cube const & A)
{
    for (auto const & Q : assoc_forms(A))
        if (!Q.is_primitive())
            return false;
    return true;
}

Cube gamma_act(Cube const & A, IntMatrix const & g1, IntMatrix const & g2, IntMatrix const & g3)
{
    MultiForm f = A.trilinear();
    IntMatrix const * gs[3] = {&g1, &g2, &g3};
    for (std::size_t i = 0; i < 3; ++i) {
        if (gs[i]->rows() != 2 || gs[i]->cols() != 2 || gs[i]->det() != 1)
            throw InputError("gamma_act: factor " + std::to_string(i + 1) + " matrix is not in SL2(Z)");
        f = multiform_substitute(f, i, gs[i]->transpose());
    }
    return Cube::from_trilinear(f);
}

Cube cube_iota(Cube const & A)
{
    auto const & a = A.a;
    return Cube({a[4], a[5], a[6], a[7], a[0], a[1], a[2], a[3]});
}

Cube cube_sigma(Cube const & A)
{
    auto const & a = A.a;
    return Cube({-a[4], -a[5], -a[6], -a[7], a[0], a[1], a[2], a[3]});
}

Cube cube_tilde(Cube const & A)
{
    auto const & a = A.a;
    return Cube({-a[0], a[1], a[2], -a[3], a[4], -a[5], -a[6], a[7]});
}

IntMatrix l_matrix(Cube const & A, int i)
{
    if (i < 1 || i > 3)
        throw InputError("l_matrix: factor must be 1, 2 or 3");
    BQF Q = assoc_forms(A)[i - 1];
    int eps = mod_floor(Q.disc(), 4) == 1 ? 1 : 0;
    return IntMatrix::mat2((Q.b - eps) / 2, -Q.c, Q.a, (-Q.b - eps) / 2);
}

Cube companion_via(Cube const & A, int factor)
{
    return Cube::from_trilinear(multiform_substitute(A.trilinear(), factor - 1, l_matrix(A, factor)));
}

Cube companion_cube(Cube const & A)
{
    return companion_via(A, 1);
}

MultiForm form_product(Cube const & A, Cube const & B)
{
    BigInt D = cube_disc(A);
    if (cube_disc(B) != D)
        throw InputError("form_product: discriminants differ");
    int eps = mod_floor(D, 4) == 1 ? 1 : 0;
    MultiForm a = A.trilinear(), b = B.trilinear();
    MultiForm out = multiform_mul(a, companion_cube(B).trilinear()) + multiform_mul(companion_cube(A).trilinear(), b);
    if (eps)
        out += multiform_mul(a, b);
    return out;
}

Cube identity_cube(BigInt const & D)
{
    auto R = ring_of_discriminant(D);
    if (R.eps == 0)
        return Cube(std::array<BigInt, 8>{0, 1, 1, 0, 1, 0, 0, D / 4});
    return Cube(std::array<BigInt, 8>{0, 1, 1, 1, 1, 1, 1, (D + 3) / 4});
}

std::array<BigInt, 2> bilinear_pair(Cube const & A, Vec const & y, Vec const & z)
{
    std::array<BigInt, 2> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out[i] += A(i, j, k) * y[j] * z[k];
    return out;
}

LemmermeyerInstance lemmermeyer_identity(Cube const & A)
{
    auto Q = assoc_forms(A);
    LemmermeyerInstance L;
    L.forms = {BQF{Q[1].a, -Q[1].b, Q[1].c}, BQF{Q[2].a, -Q[2].b, Q[2].c}, Q[0]};
    L.data.A = IntMatrix::mat2(A(1, 0, 0), A(1, 0, 1), A(1, 1, 0), A(1, 1, 1));
    L.data.B = IntMatrix::mat2(A(0, 0, 0), A(0, 0, 1), A(0, 1, 0), A(0, 1, 1));
    L.verdict = verify_gauss_identity(L.forms[0], L.forms[1], L.forms[2], L.data);
    return L;
}

// ---------------------------------------------------------------- triples

namespace {

KElem ring_elem(QuadraticRing const & R, BigInt const & rational, BigInt const & tau_coeff)
{
    return KElem(R, rational, tau_coeff);
}

std::array<KElem, 2> basis_of(OrientedIdeal const & I) { return {I.b1(), I.b2()}; }

// Bases of A from bases of A_n = gamma_act(A, g...): alpha = g^{-1} alpha_n.
std::array<KElem, 2> pull_back(IntMatrix const & g, std::array<KElem, 2> const & b)
{
    // g in SL2, g^{-1} = [[s, -q], [-r, p]]
    BigInt const &p = g(0, 0), &q = g(0, 1), &r = g(1, 0), &s = g(1, 1);
    return {BigRat(s) * b[0] + BigRat(-q) * b[1], BigRat(-r) * b[0] + BigRat(p) * b[1]};
}

BalancedTriple raw_triple(Cube const & A, QuadraticRing const & R)
{
    Cube Ap = companion_cube(A);
    KElem al1 = ring_elem(R, Ap(0, 0, 0), A(0, 0, 0));
    KElem al2 = ring_elem(R, Ap(1, 0, 0), A(1, 0, 0));
    KElem be1 = ring_elem(R, Ap(1, 0, 1), A(1, 0, 1));
    KElem be2 = ring_elem(R, Ap(1, 1, 1), A(1, 1, 1));
    KElem ga1 = be1.inverse(), ga2 = al2.inverse();
    return BalancedTriple{R, {OrientedIdeal(R, al1, al2), OrientedIdeal(R, be1, be2), OrientedIdeal(R, ga1, ga2)}};
}

bool corners_invertible(Cube const & A, QuadraticRing const & R)
{
    Cube Ap = companion_cube(A);
    return ring_elem(R, Ap(1, 0, 0), A(1, 0, 0)).norm() != 0 && ring_elem(R, Ap(1, 0, 1), A(1, 0, 1)).norm() != 0;
}

}  // namespace

Verdict check_triple(Cube const & A, BalancedTriple const & T)
{
    Verdict v;
    auto const & R = T.ring;
    Cube Ap = companion_cube(A);
    auto al = basis_of(T.ideals[0]), be = basis_of(T.ideals[1]), ga = basis_of(T.ideals[2]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                KElem prod = al[i] * be[j] * ga[k];
                if (prod != ring_elem(R, Ap(i, j, k), A(i, j, k)))
                    v.fail("alpha" + std::to_string(i + 1) + " beta" + std::to_string(j + 1) + " gamma" +
                           std::to_string(k + 1) + " = " + prod.to_string() + ", expected a'+a*tau with a = " +
                           A(i, j, k).get_str() + ", a' = " + Ap(i, j, k).get_str());
            }
    BigRat n1 = ideal_norm(T.ideals[0]), n2 = ideal_norm(T.ideals[1]), n3 = ideal_norm(T.ideals[2]);
    v.require(n1 * n2 * n3 == 1, "N(I1)N(I2)N(I3) = " + BigRat(n1 * n2 * n3).get_str() + ", not 1");

    auto Q = assoc_forms(A);
    for (int m = 0; m < 3; ++m) {
        BQF nf = ideal_to_bqf(T.ideals[m]);
        v.require(nf == Q[m], "norm form of I" + std::to_string(m + 1) + " is " + nf.to_string() + ", expected " +
                                  Q[m].to_string());
    }
    // N(I1) beta_j gamma_k = a_2jk conj(alpha1) - a_1jk conj(alpha2)
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            KElem lhs = n1 * (be[j] * ga[k]);
            KElem rhs = BigRat(A(1, j, k)) * al[0].conj() - BigRat(A(0, j, k)) * al[1].conj();
            v.require(lhs == rhs, "product law fails at (j,k) = (" + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")");
        }
    return v;
}

BalancedTriple cube_to_triple(Cube const & A)
{
    BigInt D = cube_disc(A);
    if (D == 0)
        throw InputError("cube_to_triple: cube " + A.to_string() + " is degenerate");
    auto R = ring_of_discriminant(D);
    IntMatrix I2 = IntMatrix::identity(2);

    std::vector<std::array<IntMatrix, 3>> moves{{I2, I2, I2}};
    for (long t = 1; t <= 3; ++t)
        for (int f = 0; f < 3; ++f)
            for (int lower = 0; lower < 2; ++lower) {
                std::array<IntMatrix, 3> m{I2, I2, I2};
                m[f] = lower ? IntMatrix::mat2(1, 0, t, 1) : IntMatrix::mat2(1, t, 0, 1);
                moves.push_back(m);
            }
    for (long t = 1; t <= 3; ++t)
        for (int lower = 0; lower < 4; ++lower) {
            std::array<IntMatrix, 3> m{I2, I2, I2};
            m[0] = (lower & 1) ? IntMatrix::mat2(1, 0, t, 1) : IntMatrix::mat2(1, t, 0, 1);
            m[1] = (lower & 2) ? IntMatrix::mat2(1, 0, t, 1) : IntMatrix::mat2(1, t, 0, 1);
            moves.push_back(m);
        }

    for (auto const & g : moves) {
        Cube An = gamma_act(A, g[0], g[1], g[2]);
        if (!corners_invertible(An, R))
            continue;
        BalancedTriple Tn = raw_triple(An, R);
        BalancedTriple T = Tn;
        for (int m = 0; m < 3; ++m) {
            auto b = pull_back(g[m], basis_of(Tn.ideals[m]));
            T.ideals[m] = OrientedIdeal(R, b[0], b[1]);
        }
        Verdict v = check_triple(A, T);
        if (!v)
            throw InternalError("cube_to_triple(" + A.to_string() + "): " + v.reasons.front());
        return T;
    }
    throw InputError("cube_to_triple: no corner normalization works for " + A.to_string());
}

Cube triple_to_cube(BalancedTriple const & T)
{
    BigRat n = ideal_norm(T.ideals[0]) * ideal_norm(T.ideals[1]) * ideal_norm(T.ideals[2]);
    if (n != 1)
        throw InputError("triple_to_cube: N(I1)N(I2)N(I3) = " + n.get_str() + ", triple is not balanced");
    auto al = basis_of(T.ideals[0]), be = basis_of(T.ideals[1]), ga = basis_of(T.ideals[2]);
    Cube A, Ap;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                KElem prod = al[i] * be[j] * ga[k];
                if (!prod.is_integral())
                    throw InputError("triple_to_cube: product " + prod.to_string() + " is not in S, triple is not balanced");
                A(i, j, k) = prod.q();
                Ap(i, j, k) = prod.p();
            }
    if (companion_cube(A) != Ap)
        throw InternalError("triple_to_cube: tau-free parts " + Ap.to_string() + " differ from companion " +
                            companion_cube(A).to_string());
    return A;
}

// ---------------------------------------------------------------- group law and duals

namespace {

void require_solver_domain(BigInt const & D)
{
    if (D >= 0)
        throw UnsupportedDomain("cube solver paths need D < 0 (got D = " + D.get_str() + ")");
}

void require_projective(Cube const & A, char const * what)
{
    if (!is_projective(A))
        throw InputError(std::string(what) + ": cube " + A.to_string() + " is not projective");
}

}  // namespace

Cube cube_class_compose(Cube const & A, Cube const & B)
{
    BigInt D = cube_disc(A);
    if (cube_disc(B) != D)
        throw InputError("cube_class_compose: discriminants differ");
    require_solver_domain(D);
    require_projective(A, "cube_class_compose");
    require_projective(B, "cube_class_compose");
    auto TA = cube_to_triple(A), TB = cube_to_triple(B);
    BalancedTriple T = TA;
    for (int m = 0; m < 3; ++m)
        T.ideals[m] = ideal_mul(TA.ideals[m], TB.ideals[m]);
    return triple_to_cube(T);
}

DualWitness dual_cubes_solve(Cube const & A, Cube const & B, Cube const & C)
{
    BigInt D = cube_disc(A);
    if (cube_disc(B) != D || cube_disc(C) != D)
        throw InputError("dual_cubes_solve: discriminants differ");
    require_solver_domain(D);
    require_projective(A, "dual_cubes_solve");
    require_projective(B, "dual_cubes_solve");
    require_projective(C, "dual_cubes_solve");

    auto QA = assoc_forms(A), QB = assoc_forms(B), QC = assoc_forms(C);
    BQF id = reduce(principal_form(D)).form;
    for (int i = 0; i < 3; ++i) {
        BQF sum = compose_dirichlet(compose_dirichlet(QA[i], QB[i]), QC[i]);
        if (sum != id)
            throw NotComposable("[A]+[B]+[C] is not the identity: factor " + std::to_string(i + 1) +
                                " forms sum to " + sum.to_string());
    }

    auto I = cube_to_triple(A), J = cube_to_triple(B), K = cube_to_triple(C);
    auto R = I.ring;
    std::array<KElem, 3> kappa;
    for (int m = 0; m < 2; ++m) {
        OrientedIdeal P = ideal_mul(ideal_mul(I.ideals[m], J.ideals[m]), K.ideals[m]);
        auto g = principal_generator(P);
        if (!g)
            throw NotComposable("I" + std::to_string(m + 1) + "J" + std::to_string(m + 1) + "K" +
                                std::to_string(m + 1) + " is not principal");
        kappa[m] = *g;
    }
    kappa[2] = (kappa[0] * kappa[1]).inverse();
    OrientedIdeal P3 = ideal_mul(ideal_mul(I.ideals[2], J.ideals[2]), K.ideals[2]);
    if (!(P3 == ideal_scale(kappa[2], OrientedIdeal::unit(R))))
        throw InternalError("dual_cubes_solve: third product is not (kappa1 kappa2)^-1 S");

    for (int m = 0; m < 3; ++m)
        K.ideals[m] = ideal_scale(kappa[m].inverse(), K.ideals[m]);

    auto cube_of = [&](int m) {
        return triple_to_cube(BalancedTriple{R, {I.ideals[m], J.ideals[m], K.ideals[m]}});
    };
    return DualWitness{cube_of(0), cube_of(1), cube_of(2)};
}

Verdict check_duality(std::array<Cube, 3> const & A, std::array<Cube, 3> const & T)
{
    Verdict v;
    std::array<std::array<BQF, 3>, 3> QA, QT;
    for (int i = 0; i < 3; ++i) {
        QA[i] = assoc_forms(A[i]);
        QT[i] = assoc_forms(T[i]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            v.require(QT[j][i] == QA[i][j], "Q" + std::to_string(i + 1) + "(T" + std::to_string(j + 1) + ") = " +
                                                QT[j][i].to_string() + " but Q" + std::to_string(j + 1) + "(A" +
                                                std::to_string(i + 1) + ") = " + QA[i][j].to_string());
    return v;
}

namespace {

// X = P^s(e_i, e_j) = (-P(e2, e_i, e_j), P(e1, e_i, e_j))
Vec sigma_at(Cube const & P, std::size_t i, std::size_t j)
{
    return {-P(1, int(i), int(j)), P(0, int(i), int(j))};
}

// X = P^i(e_i, e_j) = (P(e2, e_i, e_j), P(e1, e_i, e_j))
Vec iota_at(Cube const & P, std::size_t i, std::size_t j)
{
    return {P(1, int(i), int(j)), P(0, int(i), int(j))};
}

void common_conditions(Verdict & v, Cube const & A, Cube const & B, Cube const & C, Cube const & R, Cube const & S,
                       Cube const & T)
{
    BigInt D = cube_disc(A);
    v.require(cube_disc(B) == D && cube_disc(C) == D, "A, B, C have different discriminants");
    v.require(cube_disc(R) == D, "disc(R) = " + cube_disc(R).get_str() + ", expected " + D.get_str());
    v.require(cube_disc(S) == D, "disc(S) = " + cube_disc(S).get_str() + ", expected " + D.get_str());
    v.require(cube_disc(T) == D, "disc(T) = " + cube_disc(T).get_str() + ", expected " + D.get_str());

    auto QA = assoc_forms(A), QB = assoc_forms(B), QC = assoc_forms(C), QR = assoc_forms(R);
    v.require(QR[0] == QA[0], "Q1(R) = " + QR[0].to_string() + " differs from Q1(A) = " + QA[0].to_string());
    v.require(QR[1] == QB[0], "Q2(R) = " + QR[1].to_string() + " differs from Q1(B) = " + QB[0].to_string());
    Cube const * W[3] = {&R, &S, &T};
    for (int i = 0; i < 3; ++i) {
        BigInt lhs = QB[i].a * QC[i].a;
        BigInt rhs = QA[i]((*W[i])(1, 0, 0), (*W[i])(0, 0, 0));
        v.require(lhs == rhs, "Q" + std::to_string(i + 1) + "(B)(1,0) Q" + std::to_string(i + 1) + "(C)(1,0) = " +
                                  lhs.get_str() + " but Q" + std::to_string(i + 1) + "(A) at the corner = " +
                                  rhs.get_str());
    }
}

}  // namespace

Verdict verify_cube_composition(Cube const & A, Cube const & B, Cube const & C, Cube const & R, Cube const & S,
                                Cube const & T)
{
    Verdict v;
    common_conditions(v, A, B, C, R, S, T);
    if (!v.ok && cube_disc(B) != cube_disc(C))
        return v;
    MultiForm lhs = form_product(B, C);
    MultiForm a = A.trilinear();
    auto mm = find_mismatch(lhs, [&](std::vector<std::size_t> const & t) {
        return multiform_eval(a, {sigma_at(R, t[0], t[3]), sigma_at(S, t[1], t[4]), sigma_at(T, t[2], t[5])});
    });
    if (mm) {
        v.fail("(B*C) != A(R^s, S^s, T^s) at " + tuple_to_string(mm->tuple) + ": " + mm->lhs.get_str() + " vs " +
               mm->rhs.get_str());
        v.mismatch = mm;
    }
    return v;
}

Verdict verify_cube_composition_tilde(Cube const & A, Cube const & B, Cube const & C, Cube const & R,
                                      Cube const & S, Cube const & T)
{
    Verdict v;
    if (cube_disc(B) != cube_disc(C)) {
        v.fail("B and C have different discriminants");
        return v;
    }
    MultiForm lhs = form_product(B, C);
    MultiForm a = cube_tilde(A).trilinear();
    auto mm = find_mismatch(lhs, [&](std::vector<std::size_t> const & t) {
        return multiform_eval(a, {iota_at(R, t[0], t[3]), iota_at(S, t[1], t[4]), iota_at(T, t[2], t[5])});
    });
    if (mm) {
        v.fail("(B*C) != A~(R^i, S^i, T^i) at " + tuple_to_string(mm->tuple));
        v.mismatch = mm;
    }
    return v;
}

}  // namespace hcl

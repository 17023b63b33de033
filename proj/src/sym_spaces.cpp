#include "hcl/sym_spaces.hpp"

#include <sstream>

namespace hcl {

namespace {

int eps_of(BigInt const & D)
{
    return mod_floor(D, 4) == 1 ? 1 : 0;
}

// The pair (P(e1, X, U), P(e2, X, U)) for polynomial vectors X, U.
std::array<Poly, 2> bilinear_poly(Cube const & P, std::array<Poly, 2> const & X, std::array<Poly, 2> const & U)
{
    std::size_t n = X[0].nvars();
    std::array<Poly, 2> out{Poly(n), Poly(n)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                if (P(i, j, k) != 0)
                    out[i] += P(i, j, k) * (X[j] * U[k]);
    return out;
}

// P^s(X, U) = (-P(e2, X, U), P(e1, X, U))
std::array<Poly, 2> sigma_poly(Cube const & P, std::array<Poly, 2> const & X, std::array<Poly, 2> const & U)
{
    auto b = bilinear_poly(P, X, U);
    return {-b[1], b[0]};
}

std::string first_difference(Poly const & lhs, Poly const & rhs)
{
    Poly d = lhs - rhs;
    if (d.is_zero())
        return "";
    auto const & [mono, coeff] = *d.terms().begin();
    std::ostringstream os;
    os << "monomial exponents (";
    for (std::size_t i = 0; i < mono.size(); ++i)
        os << (i ? "," : "") << mono[i];
    os << ") differ by " << coeff;
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- cubics

BigInt BinaryCubic::operator()(BigInt const & x, BigInt const & y) const
{
    return a[0] * x * x * x + 3 * a[1] * x * x * y + 3 * a[2] * x * y * y + a[3] * y * y * y;
}

Poly BinaryCubic::operator()(Poly const & x, Poly const & y) const
{
    Poly x2 = x * x, y2 = y * y;
    return a[0] * (x2 * x) + BigInt(3 * a[1]) * (x2 * y) + BigInt(3 * a[2]) * (x * y2) + a[3] * (y2 * y);
}

std::string BinaryCubic::to_string() const
{
    std::ostringstream os;
    os << '[' << a[0] << ',' << a[1] << ',' << a[2] << ',' << a[3] << ']';
    return os.str();
}

Cube cubic_embed(BinaryCubic const & f)
{
    auto const & a = f.a;
    return Cube(std::array<BigInt, 8>{a[0], a[1], a[1], a[2], a[1], a[2], a[2], a[3]});
}

BigInt cubic_disc(BinaryCubic const & f)
{
    auto const & [a0, a1, a2, a3] = f.a;
    BigInt d = -3 * a1 * a1 * a2 * a2 + 4 * a0 * a2 * a2 * a2 + 4 * a1 * a1 * a1 * a3 - 6 * a0 * a1 * a2 * a3 +
               a0 * a0 * a3 * a3;
    if (d != cube_disc(cubic_embed(f)))
        throw InternalError("cubic_disc: closed formula disagrees with the cube discriminant for " + f.to_string());
    return d;
}

bool is_triply_symmetric(Cube const & A)
{
    auto const & a = A.a;
    return a[1] == a[2] && a[2] == a[4] && a[3] == a[5] && a[5] == a[6];
}

BinaryCubic cubic_from_cube(Cube const & A)
{
    if (!is_triply_symmetric(A))
        throw InputError("cube " + A.to_string() + " is not triply symmetric");
    return BinaryCubic{{A.a[0], A.a[1], A.a[3], A.a[7]}};
}

BinaryCubic cubic_companion(BinaryCubic const & f)
{
    Cube C = companion_cube(cubic_embed(f));
    if (!is_triply_symmetric(C))
        throw InternalError("companion of a triply symmetric cube is not triply symmetric: " + C.to_string());
    return cubic_from_cube(C);
}

BinaryCubic cubicovariant(BinaryCubic const & f)
{
    int eps = eps_of(cubic_disc(f));
    BinaryCubic fp = cubic_companion(f);
    BinaryCubic t;
    for (int i = 0; i < 4; ++i)
        t.a[i] = 2 * fp.a[i] + eps * f.a[i];
    return t;
}

BQF cubic_quadratic_form(BinaryCubic const & f)
{
    return assoc_forms(cubic_embed(f))[0];
}

bool syzygy_check(BinaryCubic const & f)
{
    BigInt D = cubic_disc(f);
    int eps = eps_of(D);
    BigInt c = (D - eps) / 4;
    BinaryCubic fp = cubic_companion(f);
    BQF Q = cubic_quadratic_form(f);
    Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
    Poly F = f(x, y), Fp = fp(x, y);
    Poly lhs = Fp * Fp + BigInt(eps) * (F * Fp) - c * (F * F);
    Poly rhs = eval_quadratic(Q.a, Q.b, Q.c, x, -y).pow(3);
    return lhs == rhs;
}

BinaryCubic cubic_identity(BigInt const & D)
{
    auto R = ring_of_discriminant(D);
    if (R.eps == 0)
        return BinaryCubic{{0, 1, 0, D / 4}};
    return BinaryCubic{{0, 1, 1, (D + 3) / 4}};
}

BinaryCubic cubic_tilde(BinaryCubic const & f)
{
    return BinaryCubic{{-f.a[0], f.a[1], -f.a[2], f.a[3]}};
}

Verdict verify_cubic_composition(BinaryCubic const & f, BinaryCubic const & g, BinaryCubic const & h,
                                 Cube const & R)
{
    Verdict v;
    BigInt D = cubic_disc(f);
    if (cubic_disc(g) != D || cubic_disc(h) != D) {
        v.fail("f, g, h have different discriminants");
        return v;
    }
    int eps = eps_of(D);
    v.require(cube_disc(R) == D, "disc(R) = " + cube_disc(R).get_str() + ", expected " + D.get_str());

    BQF Qf = cubic_quadratic_form(f), Qg = cubic_quadratic_form(g), Qh = cubic_quadratic_form(h);
    auto QR = assoc_forms(R);
    v.require(QR[0] == Qf, "Q1(R) = " + QR[0].to_string() + " differs from Q(f) = " + Qf.to_string());
    v.require(QR[1] == Qg, "Q2(R) = " + QR[1].to_string() + " differs from Q(g) = " + Qg.to_string());
    BigInt corner_l = Qg.a * Qh.a, corner_r = Qf(R(1, 0, 0), R(0, 0, 0));
    v.require(corner_l == corner_r, "Q(g)(1,0) Q(h)(1,0) = " + corner_l.get_str() + " but Q(f)(r211, r111) = " +
                                        corner_r.get_str());

    // variables x, y, u, v
    std::array<Poly, 2> X{Poly::var(4, 0), Poly::var(4, 1)}, U{Poly::var(4, 2), Poly::var(4, 3)};
    BinaryCubic gp = cubic_companion(g), hp = cubic_companion(h);
    Poly gX = g(X[0], X[1]), hU = h(U[0], U[1]);
    Poly lhs = gX * hp(U[0], U[1]) + gp(X[0], X[1]) * hU;
    if (eps)
        lhs += gX * hU;
    auto W = sigma_poly(R, X, U);
    Poly rhs = f(W[0], W[1]);
    std::string diff = first_difference(lhs, rhs);
    if (!diff.empty())
        v.fail("(g*h)(X;U) != f(R^s(X,U)): " + diff);
    return v;
}

// ---------------------------------------------------------------- cubic triples

namespace {

std::array<KElem, 2> cubic_basis(BinaryCubic const & f, BinaryCubic const & fp, QuadraticRing const & R)
{
    return {KElem(R, fp.a[1], f.a[1]), KElem(R, fp.a[2], f.a[2])};
}

bool independent(std::array<KElem, 2> const & b)
{
    BigRat det = b[0].rational_part() * b[1].tau_part() - b[0].tau_part() * b[1].rational_part();
    return det != 0;
}

BinaryCubic cubic_act(BinaryCubic const & f, IntMatrix const & g)
{
    return cubic_from_cube(gamma_act(cubic_embed(f), g, g, g));
}

void require_negative(BigInt const & D, char const * what)
{
    if (D >= 0)
        throw UnsupportedDomain(std::string(what) + " needs D < 0 (got D = " + D.get_str() + ")");
}

}  // namespace

CubicTriple cubic_to_triple(BinaryCubic const & f)
{
    BigInt D = cubic_disc(f);
    require_negative(D, "cubic_to_triple");
    if (!is_projective(cubic_embed(f)))
        throw InputError("cubic_to_triple: " + f.to_string() + " is not projective");
    auto R = ring_of_discriminant(D);

    BinaryCubic h = f;
    for (int t = 0;; ++t) {
        if (t > 0) {
            // small unipotent moves until the basis is nondegenerate
            long s = (t + 1) / 2 * ((t % 2) ? 1 : -1);
            h = cubic_act(f, t <= 6 ? IntMatrix::mat2(1, s, 0, 1) : IntMatrix::mat2(1, 0, s, 1));
        }
        BinaryCubic hp = cubic_companion(h);
        auto b = cubic_basis(h, hp, R);
        if (b[0].is_zero() || b[1].is_zero() || !independent(b)) {
            if (t > 12)
                throw InternalError("cubic_to_triple: no nondegenerate basis for " + f.to_string());
            continue;
        }
        CubicTriple T{R, OrientedIdeal(R, b[0], b[1]), b[0] * b[1]};
        // (x alpha + y beta)^3 = delta (h' + h tau) at the four monomials
        KElem powers[4] = {b[0] * b[0] * b[0], b[0] * b[0] * b[1], b[0] * b[1] * b[1], b[1] * b[1] * b[1]};
        for (int k = 0; k < 4; ++k)
            if (powers[k] != T.delta * KElem(R, hp.a[k], h.a[k]))
                throw InternalError("cubic_to_triple: basis relation fails for " + h.to_string());
        return T;
    }
}

BinaryCubic triple_to_cubic(CubicTriple const & T)
{
    OrientedIdeal I = T.ideal.canonical();
    KElem al = I.b1(), be = I.b2();
    KElem di = T.delta.inverse();
    KElem products[4] = {al * al * al * di, al * al * be * di, al * be * be * di, be * be * be * di};
    BinaryCubic f;
    for (int k = 0; k < 4; ++k) {
        if (!products[k].is_integral())
            throw InternalError("triple_to_cubic: I^3 is not contained in delta S");
        f.a[k] = products[k].q();
    }
    return f;
}

CubicComposite cubic_class_compose(BinaryCubic const & f, BinaryCubic const & g)
{
    if (cubic_disc(f) != cubic_disc(g))
        throw InputError("cubic_class_compose: discriminants differ");
    CubicTriple a = cubic_to_triple(f), b = cubic_to_triple(g);
    CubicTriple t{a.ring, ideal_mul(a.ideal, b.ideal), a.delta * b.delta};
    return CubicComposite{t, triple_to_cubic(t)};
}

Verdict cubic_classes_sum_to_identity(BinaryCubic const & f, BinaryCubic const & g, BinaryCubic const & h)
{
    Verdict v;
    BigInt D = cubic_disc(f);
    if (cubic_disc(g) != D || cubic_disc(h) != D) {
        v.fail("f, g, h have different discriminants");
        return v;
    }
    require_negative(D, "cubic_classes_sum_to_identity");
    BQF sum = compose_dirichlet(compose_dirichlet(cubic_quadratic_form(f), cubic_quadratic_form(g)),
                                cubic_quadratic_form(h));
    BQF id = reduce(principal_form(D)).form;
    v.require(sum == id, "cube classes sum to " + sum.to_string() + ", not the identity");
    KElem delta = cubic_to_triple(f).delta * cubic_to_triple(g).delta * cubic_to_triple(h).delta;
    v.require(kelem_cube_root(delta).has_value(), "delta_f delta_g delta_h = " + delta.to_string() +
                                                      " is not a cube in K");
    return v;
}

// ---------------------------------------------------------------- pairs

PairBQF::PairBQF(BQF f1, BQF f2) : F1(std::move(f1)), F2(std::move(f2))
{
    if (mod_floor(F1.b, 2) != 0 || mod_floor(F2.b, 2) != 0)
        throw InputError("pair of forms needs even middle coefficients, got " + F1.to_string() + ", " +
                         F2.to_string());
}

Poly PairBQF::operator()(Poly const & x1, Poly const & x2, Poly const & y1, Poly const & y2) const
{
    return x1 * eval_quadratic(F1.a, F1.b, F1.c, y1, y2) + x2 * eval_quadratic(F2.a, F2.b, F2.c, y1, y2);
}

std::string PairBQF::to_string() const
{
    return "(" + F1.to_string() + ", " + F2.to_string() + ")";
}

Cube pair_embed(PairBQF const & F)
{
    BigInt b = F.F1.b / 2, e = F.F2.b / 2;
    return Cube(std::array<BigInt, 8>{F.F1.a, b, b, F.F1.c, F.F2.a, e, e, F.F2.c});
}

BigInt pair_disc(PairBQF const & F)
{
    return cube_disc(pair_embed(F));
}

bool is_doubly_symmetric(Cube const & A)
{
    return A.a[1] == A.a[2] && A.a[5] == A.a[6];
}

PairBQF pair_from_cube(Cube const & A)
{
    if (!is_doubly_symmetric(A))
        throw InputError("cube " + A.to_string() + " is not doubly symmetric");
    auto const & a = A.a;
    return PairBQF(BQF{a[0], 2 * a[1], a[3]}, BQF{a[4], 2 * a[5], a[7]});
}

PairBQF pair_identity(BigInt const & D)
{
    auto R = ring_of_discriminant(D);
    if (R.eps == 0)
        return PairBQF(BQF{0, 2, 0}, BQF{1, 0, D / 4});
    return PairBQF(BQF{0, 2, 1}, BQF{1, 2, (D + 3) / 4});
}

PairBQF pair_companion(PairBQF const & F)
{
    Cube C = companion_cube(pair_embed(F));
    if (!is_doubly_symmetric(C))
        throw InternalError("companion of a doubly symmetric cube is not doubly symmetric: " + C.to_string());
    return pair_from_cube(C);
}

PairBQF pair_class_compose(PairBQF const & F, PairBQF const & G)
{
    BigInt D = pair_disc(F);
    if (pair_disc(G) != D)
        throw InputError("pair_class_compose: discriminants differ");
    Cube AF = pair_embed(F), AG = pair_embed(G);
    if (!is_projective(AF) || !is_projective(AG))
        throw InputError("pair_class_compose: inputs must be projective");
    BQF Q = compose_dirichlet(assoc_forms(AF)[1], assoc_forms(AG)[1]);
    OrientedIdeal I = bqf_to_ideal(Q);
    OrientedIdeal I1 = ideal_inverse(ideal_mul(I, I));
    Cube C = triple_to_cube(BalancedTriple{I.ring(), {I1, I, I}});
    return pair_from_cube(C);
}

Verdict verify_pair_composition(PairBQF const & F, PairBQF const & G, PairBQF const & H, Cube const & R,
                                Cube const & S, PairSlot slot)
{
    Verdict v;
    BigInt D = pair_disc(F);
    if (pair_disc(G) != D || pair_disc(H) != D) {
        v.fail("F, G, H have different discriminants");
        return v;
    }
    int eps = eps_of(D);
    v.require(cube_disc(R) == D, "disc(R) = " + cube_disc(R).get_str() + ", expected " + D.get_str());
    v.require(cube_disc(S) == D, "disc(S) = " + cube_disc(S).get_str() + ", expected " + D.get_str());
    v.notes.push_back(slot == PairSlot::sigma ? "second slot uses S^s(y,v)" : "second slot uses S(y,v)");

    auto QF = assoc_forms(pair_embed(F)), QG = assoc_forms(pair_embed(G)), QH = assoc_forms(pair_embed(H));
    auto QR = assoc_forms(R);
    v.require(QR[0] == QF[0], "Q1(R) = " + QR[0].to_string() + " differs from Q1(F) = " + QF[0].to_string());
    v.require(QR[1] == QG[0], "Q2(R) = " + QR[1].to_string() + " differs from Q1(G) = " + QG[0].to_string());
    Cube const * W[2] = {&R, &S};
    for (int i = 0; i < 2; ++i) {
        BigInt l = QG[i].a * QH[i].a, r = QF[i]((*W[i])(1, 0, 0), (*W[i])(0, 0, 0));
        v.require(l == r, "Q" + std::to_string(i + 1) + "(G)(1,0) Q" + std::to_string(i + 1) + "(H)(1,0) = " +
                              l.get_str() + " but Q" + std::to_string(i + 1) + "(F) at the corner = " + r.get_str());
    }

    // variables x1 x2 y1 y2 u1 u2 v1 v2
    auto var = [](std::size_t i) { return Poly::var(8, i); };
    std::array<Poly, 2> x{var(0), var(1)}, y{var(2), var(3)}, u{var(4), var(5)}, w{var(6), var(7)};
    PairBQF Gp = pair_companion(G), Hp = pair_companion(H);
    Poly g = G(x[0], x[1], y[0], y[1]), hh = H(u[0], u[1], w[0], w[1]);
    Poly lhs = g * Hp(u[0], u[1], w[0], w[1]) + Gp(x[0], x[1], y[0], y[1]) * hh;
    if (eps)
        lhs += g * hh;
    auto X = sigma_poly(R, x, u);
    auto Y = slot == PairSlot::sigma ? sigma_poly(S, y, w) : bilinear_poly(S, y, w);
    Poly rhs = F(X[0], X[1], Y[0], Y[1]);
    std::string diff = first_difference(lhs, rhs);
    if (!diff.empty())
        v.fail("(G*H) != F(R^s(x,u), S(y,v)): " + diff);
    return v;
}

}  // namespace hcl

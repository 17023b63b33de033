#include "hcl/commands.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

namespace hcl {

json Report::to_json() const
{
    json out;
    out["command"] = command;
    out["ok"] = ok;
    out["exit_code"] = exit_code;
    out["reasons"] = reasons;
    out["notes"] = notes;
    out["artifacts"] = artifacts;
    out["seconds"] = seconds;
    return out;
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << command << ": " << (ok ? "OK" : "FAILED") << " (exit " << exit_code << ")\n";
    for (auto const & r : reasons)
        os << "  reason: " << r << '\n';
    for (auto const & n : notes)
        os << "  note: " << n << '\n';
    if (!artifacts.empty())
        os << artifacts.dump(2) << '\n';
    return os.str();
}

namespace {

void absorb(Report & r, Verdict const & v)
{
    r.reasons.insert(r.reasons.end(), v.reasons.begin(), v.reasons.end());
    r.notes.insert(r.notes.end(), v.notes.begin(), v.notes.end());
    if (v.mismatch) {
        json t = json::array();
        for (auto i : v.mismatch->tuple)
            t.push_back(i + 1);
        r.artifacts["first_failing_tuple"] = t;
        r.artifacts["lhs"] = int_to_json(v.mismatch->lhs);
        r.artifacts["rhs"] = int_to_json(v.mismatch->rhs);
    }
    if (!v.ok) {
        r.ok = false;
        r.exit_code = 1;
    }
}

void require_count(std::vector<json> const & list, std::size_t n, char const * what)
{
    if (list.size() != n)
        throw InputError(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                         std::to_string(list.size()));
}

void check_declared(Envelope const & in, BigInt const & D)
{
    if (in.discriminant && *in.discriminant != D)
        throw InputError("declared discriminant " + in.discriminant->get_str() + " but the objects have " +
                         D.get_str());
}

template <class T, class F>
std::vector<T> parse_all(std::vector<json> const & list, F parse)
{
    std::vector<T> out;
    for (auto const & j : list)
        out.push_back(parse(j));
    return out;
}

json forms_json(Cube const & A)
{
    json out = json::array();
    for (auto const & Q : assoc_forms(A))
        out.push_back(to_json(Q));
    return out;
}

// Compares a computed artifact against the fixture's expected value, if any.
void expect(Report & r, Envelope const & in, std::string const & key, json const & got)
{
    if (!in.expected.contains(key))
        return;
    // normalise through BigInt so "3" and 3 compare equal
    auto norm = [](json const & j, auto const & self) -> json {
        if (j.is_array()) {
            json out = json::array();
            for (auto const & x : j)
                out.push_back(self(x, self));
            return out;
        }
        return int_to_json(int_from_json(j));
    };
    if (norm(in.expected[key], norm) != norm(got, norm)) {
        r.ok = false;
        r.exit_code = 1;
        r.reasons.push_back("expected " + key + " " + in.expected[key].dump() + ", computed " + got.dump());
    }
}

Report verify_cube_payload(Envelope const & in)
{
    Report r{"verify cube"};
    require_count(in.objects, 3, "cube objects [A, B, C]");
    require_count(in.witness, 3, "cube witness [R, S, T]");
    auto A = parse_all<Cube>(in.objects, cube_from_json);
    auto W = parse_all<Cube>(in.witness, cube_from_json);
    check_declared(in, cube_disc(A[0]));
    absorb(r, verify_cube_composition(A[0], A[1], A[2], W[0], W[1], W[2]));
    json forms = json::array();
    for (auto const & c : A)
        forms.push_back(forms_json(c));
    r.artifacts["forms"] = forms;
    expect(r, in, "forms", forms);
    return r;
}

Report verify_cubic_payload(Envelope const & in)
{
    Report r{"verify cubic"};
    require_count(in.objects, 3, "cubic objects [f, g, h]");
    require_count(in.witness, 1, "cubic witness [R]");
    auto f = parse_all<BinaryCubic>(in.objects, cubic_from_json);
    Cube R = cube_from_json(in.witness[0]);
    check_declared(in, cubic_disc(f[0]));
    absorb(r, verify_cubic_composition(f[0], f[1], f[2], R));
    json comps = json::array(), forms = json::array();
    for (auto const & c : f) {
        comps.push_back(to_json(cubic_companion(c)));
        forms.push_back(to_json(cubic_quadratic_form(c)));
    }
    r.artifacts["companions"] = comps;
    r.artifacts["forms"] = forms;
    expect(r, in, "companions", comps);
    expect(r, in, "forms", forms);
    return r;
}

Report verify_pair_payload(Envelope const & in)
{
    Report r{"verify pair"};
    require_count(in.objects, 3, "pair objects [F, G, H]");
    require_count(in.witness, 2, "pair witness [R, S]");
    auto F = parse_all<PairBQF>(in.objects, pair_from_json);
    auto W = parse_all<Cube>(in.witness, cube_from_json);
    check_declared(in, pair_disc(F[0]));
    absorb(r, verify_pair_composition(F[0], F[1], F[2], W[0], W[1]));
    json comps = json::array();
    for (auto const & p : F)
        comps.push_back(to_json(pair_companion(p)));
    r.artifacts["companions"] = comps;
    expect(r, in, "companions", comps);
    return r;
}

Report verify_quat_payload(Envelope const & in)
{
    Report r{"verify quat"};
    require_count(in.objects, 3, "quat objects [A, B, C] (cubes)");
    require_count(in.witness, 3, "quat witness [R, S, T]");
    auto A = parse_all<Cube>(in.objects, cube_from_json);
    auto W = parse_all<Cube>(in.witness, cube_from_json);
    check_declared(in, cube_disc(A[0]));
    absorb(r, verify_quaternary_composition(A[0], A[1], A[2], W[0], W[1], W[2]));
    json comps = json::array(), forms = json::array();
    for (auto const & c : A) {
        comps.push_back(to_json(companion_cube(c)));
        forms.push_back(forms_json(c));
        if (pair_companion(phi(c)) != phi(companion_cube(c))) {
            r.ok = false;
            r.exit_code = 1;
            r.reasons.push_back("companion of phi(" + c.to_string() + ") is not phi of its companion cube");
        }
    }
    r.artifacts["companions"] = comps;
    r.artifacts["forms"] = forms;
    r.artifacts["pair_discriminant"] = int_to_json(pair_disc(phi(A[0])));
    expect(r, in, "companions", comps);
    expect(r, in, "forms", forms);
    return r;
}

Report verify_gauss_payload(Envelope const & in)
{
    Report r{"verify gauss"};
    require_count(in.objects, 3, "gauss objects [Q1, Q2, Q3]");
    require_count(in.witness, 2, "gauss witness [A, B] (2x2 matrices)");
    auto Q = parse_all<BQF>(in.objects, bqf_from_json);
    GaussBilinearData data{matrix_from_json(in.witness[0], 2, 2), matrix_from_json(in.witness[1], 2, 2)};
    check_declared(in, Q[0].disc());
    absorb(r, verify_gauss_identity(Q[0], Q[1], Q[2], data));
    return r;
}

Report verify_senary_payload(Envelope const & in)
{
    Report r{"verify senary"};
    if (!in.discriminant)
        throw InputError("senary verification needs \"discriminant\"");
    BigInt D = *in.discriminant;
    Cube R = senary_identity_cube(D);
    if (!in.witness.empty()) {
        require_count(in.witness, 1, "senary witness [R]");
        R = cube_from_json(in.witness[0]);
    }
    absorb(r, verify_senary_identity_with(D, R, SenaryBilinear::product));
    r.artifacts["identity_form"] = to_json(senary_identity_pair(D).E);
    r.artifacts["companion_form"] = to_json(senary_identity_pair(D).Ep);
    return r;
}

}  // namespace

Report cmd_classgroup(BigInt const & D)
{
    Report r{"classgroup"};
    ClassGroupTable G = enumerate_class_group(D);
    json reps = json::array(), table = json::array();
    for (auto const & Q : G.reps)
        reps.push_back(to_json(Q));
    for (auto const & row : G.table)
        table.push_back(row);
    r.artifacts["discriminant"] = int_to_json(D);
    r.artifacts["class_number"] = G.reps.size();
    if (D < 0)
        r.artifacts["positive_definite_classes"] = G.positive_count;
    r.artifacts["representatives"] = reps;
    r.artifacts["identity"] = G.identity;
    r.artifacts["table"] = table;
    for (auto const & e : check_group_axioms(G)) {
        r.ok = false;
        r.exit_code = 1;
        r.reasons.push_back(e);
    }
    return r;
}

Report cmd_compose(Envelope const & in)
{
    Report r{"compose " + in.space};
    require_count(in.objects, 2, "compose objects");
    if (in.space == "bqf") {
        BQF P = bqf_from_json(in.objects[0]), Q = bqf_from_json(in.objects[1]);
        check_declared(in, P.disc());
        if (Q.disc() != P.disc())
            throw InputError("forms have different discriminants");
        if (!P.is_primitive() || !Q.is_primitive())
            throw InputError("composition needs primitive forms");
        r.artifacts["result"] = to_json(compose_dirichlet(P, Q));
    } else if (in.space == "cube") {
        Cube A = cube_from_json(in.objects[0]), B = cube_from_json(in.objects[1]);
        check_declared(in, cube_disc(A));
        Cube C = cube_class_compose(A, B);
        r.artifacts["result"] = to_json(C);
        r.artifacts["forms"] = forms_json(C);
    } else if (in.space == "cubic") {
        BinaryCubic f = cubic_from_json(in.objects[0]), g = cubic_from_json(in.objects[1]);
        check_declared(in, cubic_disc(f));
        auto c = cubic_class_compose(f, g);
        r.artifacts["result"] = to_json(c.form);
        r.artifacts["ideal"] = c.triple.ideal.to_string();
        r.artifacts["delta"] = c.triple.delta.to_string();
    } else if (in.space == "pair") {
        PairBQF F = pair_from_json(in.objects[0]), G = pair_from_json(in.objects[1]);
        check_declared(in, pair_disc(F));
        r.artifacts["result"] = to_json(pair_class_compose(F, G));
    } else {
        throw InputError("compose: unknown space '" + in.space + "' (bqf, cube, cubic or pair)");
    }
    return r;
}

Report cmd_verify(std::string const & law, Envelope const & in)
{
    if (law == "cube")
        return verify_cube_payload(in);
    if (law == "cubic")
        return verify_cubic_payload(in);
    if (law == "pair")
        return verify_pair_payload(in);
    if (law == "quat")
        return verify_quat_payload(in);
    if (law == "gauss")
        return verify_gauss_payload(in);
    if (law == "senary")
        return verify_senary_payload(in);
    throw InputError("verify: unknown law '" + law + "' (gauss, cube, cubic, pair, quat or senary)");
}

Report cmd_dual(Envelope const & in)
{
    Report r{"dual"};
    require_count(in.objects, 3, "dual objects [A, B, C]");
    auto A = parse_all<Cube>(in.objects, cube_from_json);
    check_declared(in, cube_disc(A[0]));
    DualWitness w = dual_cubes_solve(A[0], A[1], A[2]);
    r.artifacts["witness"] = json::array({to_json(w.R), to_json(w.S), to_json(w.T)});
    absorb(r, verify_cube_composition(A[0], A[1], A[2], w.R, w.S, w.T));
    absorb(r, check_duality({A[0], A[1], A[2]}, {w.R, w.S, w.T}));
    return r;
}

Report cmd_examples(std::string const & dir)
{
    Report r{"examples"};
    struct Item
    {
        char const * file;
        char const * law;
    };
    Item const items[] = {{"cubes_d-47.json", "cube"},
                          {"cubics_d8.json", "cubic"},
                          {"pairs_d-31.json", "pair"},
                          {"quaternary_d-47.json", "quat"}};
    json results = json::array();
    int passed = 0;
    for (auto const & it : items) {
        std::string path = (std::filesystem::path(dir) / it.file).string();
        Report sub = run_guarded(std::string("verify ") + it.law,
                                 [&] { return cmd_verify(it.law, load_envelope(path)); });
        results.push_back({{"fixture", it.file}, {"ok", sub.ok}, {"reasons", sub.reasons}, {"notes", sub.notes}});
        if (sub.ok)
            ++passed;
        else
            r.reasons.push_back(std::string(it.file) + " failed");
    }
    r.artifacts["examples"] = results;
    r.artifacts["passed"] = passed;
    r.artifacts["total"] = std::size(items);
    if (passed != int(std::size(items))) {
        r.ok = false;
        r.exit_code = 1;
    }
    return r;
}

Report run_guarded(std::string const & command, std::function<Report()> const & body)
{
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    auto failed = [&](int code, std::string const & what) {
        r = Report{command};
        r.ok = false;
        r.exit_code = code;
        r.reasons.push_back(what);
    };
    try {
        r = body();
    } catch (InputError const & e) {
        failed(2, std::string("malformed input: ") + e.what());
    } catch (json::exception const & e) {
        failed(2, std::string("malformed input: ") + e.what());
    } catch (UnsupportedDomain const & e) {
        failed(3, std::string("unsupported domain: ") + e.what());
    } catch (NotComposable const & e) {
        failed(1, std::string("not composable: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace hcl

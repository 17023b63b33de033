#include "hcl/commands.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hcl;
using namespace hcl::testing;

namespace {

Report run(std::string const & name, std::function<Report()> const & body)
{
    return run_guarded(name, body);
}

std::string fixture(char const * name)
{
    return std::string(HCL_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("integers round trip as strings and are read from numbers too")
{
    BigInt big = parse_bigint("123456789012345678901234567890123");
    CHECK(int_to_json(big) == json("123456789012345678901234567890123"));
    CHECK(int_from_json(int_to_json(big)) == big);
    CHECK(int_from_json(json(-17)) == -17);
    CHECK_THROWS_AS(int_from_json(json(1.5)), InputError);
    CHECK_THROWS_AS(int_from_json(json("x1")), InputError);
    CHECK_THROWS_AS(int_from_json(json::array()), InputError);
}

TEST_CASE("objects round trip through JSON")
{
    for (int i = 0; i < 50; ++i) {
        Cube A = random_cube(1000);
        CHECK(cube_from_json(to_json(A)) == A);
        BinaryCubic f = random_cubic(1000);
        CHECK(cubic_from_json(to_json(f)) == f);
        BQF Q{uniform(-99, 99), uniform(-99, 99), uniform(-99, 99)};
        CHECK(bqf_from_json(to_json(Q)) == Q);
        PairBQF P({uniform(-9, 9), 2 * uniform(-9, 9), uniform(-9, 9)}, {uniform(-9, 9), 2 * uniform(-9, 9), uniform(-9, 9)});
        CHECK(pair_from_json(to_json(P)) == P);
        QuatAltPair Z = phi(A);
        CHECK(quat_from_json(to_json(Z)) == Z);
        SenaryAlt3 E = wedge222(A);
        CHECK(senary_from_json(to_json(E)) == E);
    }
    Cube huge;
    huge.a[7] = parse_bigint("-98765432109876543210987654321");
    CHECK(cube_from_json(json::parse(to_json(huge).dump())) == huge);
}

TEST_CASE("malformed objects are rejected")
{
    CHECK_THROWS_AS(cube_from_json(json::array({1, 2, 3})), InputError);
    CHECK_THROWS_AS(bqf_from_json(json::object()), InputError);
    CHECK_THROWS_AS(pair_from_json(json::parse(R"([[1,1,1],[0,2,0]])")), InputError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[0,1],[-1,0]]"), 4, 4), InputError);
    IntMatrix notAlt(4, 4);
    notAlt(0, 1) = 1;
    CHECK_THROWS_AS(quat_from_json(json::array({to_json(notAlt), to_json(IntMatrix(4, 4))})), InputError);
}

TEST_CASE("envelopes parse, round trip and report missing fields")
{
    Envelope e = load_envelope(fixture("cubes_d-47.json"));
    CHECK(e.space == "cube");
    REQUIRE(e.discriminant.has_value());
    CHECK(*e.discriminant == -47);
    CHECK(e.objects.size() == 3);
    CHECK(e.witness.size() == 3);
    Envelope back = envelope_from_json(to_json(e));
    CHECK(back.space == e.space);
    CHECK(back.objects == e.objects);
    CHECK(back.witness == e.witness);
    CHECK_THROWS_AS(parse_envelope("{not json"), InputError);
    CHECK_THROWS_AS(parse_envelope(R"({"objects": []})"), InputError);
    CHECK_THROWS_AS(parse_envelope(R"({"space": "cube"})"), InputError);
    CHECK_THROWS_AS(parse_envelope(R"({"space": "cube", "objects": 3})"), InputError);
    CHECK_THROWS_AS(load_envelope("/nonexistent/path.json"), InputError);
}

TEST_CASE("compose bqf gives the principal form for inverse classes")
{
    Envelope e = parse_envelope(R"({"space": "bqf", "objects": [[2, 1, 6], [2, -1, 6]]})");
    Report r = run("compose", [&] { return cmd_compose(e); });
    CHECK(r.exit_code == 0);
    CHECK(bqf_from_json(r.artifacts["result"]) == BQF{1, 1, 12});
}

TEST_CASE("command exit codes")
{
    CHECK(run("classgroup", [] { return cmd_classgroup(-47); }).exit_code == 0);
    CHECK(run("classgroup", [] { return cmd_classgroup(7); }).exit_code == 2);
    Report ok = run("verify", [] { return cmd_verify("cube", load_envelope(fixture("cubes_d-47.json"))); });
    CHECK(ok.exit_code == 0);
    Report bad = run("verify", [] {
        return cmd_verify("cube", load_envelope(std::string(HCL_FIXTURE_DIR) + "/../tests/data/cubes_perturbed.json"));
    });
    CHECK(bad.exit_code == 1);
    CHECK(bad.artifacts.contains("first_failing_tuple"));
    Report wrongDisc = run("verify", [] {
        Envelope e = load_envelope(fixture("cubes_d-47.json"));
        e.discriminant = BigInt(-23);
        return cmd_verify("cube", e);
    });
    CHECK(wrongDisc.exit_code == 2);
    Report unknown = run("verify", [] { return cmd_verify("nonsense", Envelope{"cube"}); });
    CHECK(unknown.exit_code == 2);
    Report positive = run("compose", [] {
        return cmd_compose(parse_envelope(R"({"space": "cubic", "objects": [[0,1,0,2],[1,1,2,2]]})"));
    });
    CHECK(positive.exit_code == 3);
    Report notComposable = run("dual", [] {
        return cmd_dual(parse_envelope(
            R"({"space": "cube", "objects": [[0,-1,-2,-1,-1,0,0,6],[0,-1,-2,-1,-1,0,0,6],[0,-1,-2,-1,-1,0,0,6]]})"));
    });
    CHECK(notComposable.exit_code == 1);
}

TEST_CASE("the bundled examples all pass")
{
    Report r = run("examples", [] { return cmd_examples(HCL_FIXTURE_DIR); });
    CHECK(r.exit_code == 0);
    CHECK(r.artifacts["passed"] == 4);
    CHECK(run("examples", [] { return cmd_examples("/nonexistent"); }).exit_code != 0);
}

#include "hcl/serialize.hpp"

#include <fstream>
#include <sstream>

namespace hcl {

namespace {

json const & require_array(json const & j, std::size_t n, char const * what)
{
    if (!j.is_array() || j.size() != n)
        throw InputError(std::string(what) + ": expected an array of " + std::to_string(n) + " entries, got " +
                         j.dump());
    return j;
}

}  // namespace

json int_to_json(BigInt const & x)
{
    return x.get_str();
}

BigInt int_from_json(json const & j)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? BigInt(std::to_string(j.get<unsigned long long>()))
                                      : BigInt(std::to_string(j.get<long long>()));
    if (j.is_string())
        return parse_bigint(j.get<std::string>());
    throw InputError("expected an integer or a decimal string, got " + j.dump());
}

json to_json(BQF const & Q)
{
    return json::array({int_to_json(Q.a), int_to_json(Q.b), int_to_json(Q.c)});
}

json to_json(Cube const & A)
{
    json out = json::array();
    for (auto const & x : A.a)
        out.push_back(int_to_json(x));
    return out;
}

json to_json(BinaryCubic const & f)
{
    json out = json::array();
    for (auto const & x : f.a)
        out.push_back(int_to_json(x));
    return out;
}

json to_json(PairBQF const & F)
{
    return json::array({to_json(F.F1), to_json(F.F2)});
}

json to_json(IntMatrix const & M)
{
    json out = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < M.cols(); ++k)
            row.push_back(int_to_json(M(i, k)));
        out.push_back(row);
    }
    return out;
}

json to_json(QuatAltPair const & P)
{
    return json::array({to_json(P.F1), to_json(P.F2)});
}

json to_json(SenaryAlt3 const & E)
{
    json out = json::array();
    for (auto const & x : E.a)
        out.push_back(int_to_json(x));
    return out;
}

BQF bqf_from_json(json const & j)
{
    require_array(j, 3, "binary quadratic form");
    return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2])};
}

Cube cube_from_json(json const & j)
{
    require_array(j, 8, "cube");
    Cube A;
    for (std::size_t i = 0; i < 8; ++i)
        A.a[i] = int_from_json(j[i]);
    return A;
}

BinaryCubic cubic_from_json(json const & j)
{
    require_array(j, 4, "binary cubic");
    BinaryCubic f;
    for (std::size_t i = 0; i < 4; ++i)
        f.a[i] = int_from_json(j[i]);
    return f;
}

PairBQF pair_from_json(json const & j)
{
    require_array(j, 2, "pair of forms");
    return PairBQF(bqf_from_json(j[0]), bqf_from_json(j[1]));
}

IntMatrix matrix_from_json(json const & j, std::size_t rows, std::size_t cols)
{
    require_array(j, rows, "matrix");
    IntMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        require_array(j[i], cols, "matrix row");
        for (std::size_t k = 0; k < cols; ++k)
            M(i, k) = int_from_json(j[i][k]);
    }
    return M;
}

QuatAltPair quat_from_json(json const & j)
{
    require_array(j, 2, "quaternary alternating pair");
    return QuatAltPair(matrix_from_json(j[0], 4, 4), matrix_from_json(j[1], 4, 4));
}

SenaryAlt3 senary_from_json(json const & j)
{
    require_array(j, 20, "senary alternating 3-form");
    SenaryAlt3 E;
    for (std::size_t i = 0; i < 20; ++i)
        E.a[i] = int_from_json(j[i]);
    return E;
}

json to_json(Envelope const & e)
{
    json out;
    out["space"] = e.space;
    if (e.discriminant)
        out["discriminant"] = int_to_json(*e.discriminant);
    out["objects"] = e.objects;
    if (!e.witness.empty())
        out["witness"] = e.witness;
    if (!e.expected.empty())
        out["expected"] = e.expected;
    return out;
}

Envelope envelope_from_json(json const & j)
{
    if (!j.is_object())
        throw InputError("envelope must be a JSON object");
    if (!j.contains("space") || !j["space"].is_string())
        throw InputError("envelope needs a string \"space\"");
    Envelope e;
    e.space = j["space"].get<std::string>();
    if (j.contains("discriminant"))
        e.discriminant = int_from_json(j["discriminant"]);
    auto list = [&](char const * key, std::vector<json> & dst, bool required) {
        if (!j.contains(key)) {
            if (required)
                throw InputError(std::string("envelope needs \"") + key + "\"");
            return;
        }
        if (!j[key].is_array())
            throw InputError(std::string("\"") + key + "\" must be an array");
        dst.assign(j[key].begin(), j[key].end());
    };
    list("objects", e.objects, true);
    list("witness", e.witness, false);
    if (j.contains("expected")) {
        if (!j["expected"].is_object())
            throw InputError("\"expected\" must be an object");
        e.expected = j["expected"];
    }
    return e;
}

Envelope parse_envelope(std::string const & text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (json::parse_error const & err) {
        throw InputError(std::string("malformed JSON: ") + err.what());
    }
    return envelope_from_json(j);
}

Envelope load_envelope(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_envelope(os.str());
}

}  // namespace hcl

#pragma once

// JSON wire format. Integers are written as decimal strings and read from
// either strings or JSON integers. Every payload is an envelope
//
//   {"space": "...", "discriminant": "-47", "objects": [...],
//    "witness": [...], "expected": {...}}
//
// where only "space" and "objects" are required.

#include "hcl/alt_forms.hpp"
#include "hcl/sym_spaces.hpp"

#include <json.hpp>

namespace hcl {

using json = nlohmann::json;

json int_to_json(BigInt const & x);
BigInt int_from_json(json const & j);

json to_json(BQF const & Q);
json to_json(Cube const & A);
json to_json(BinaryCubic const & f);
json to_json(PairBQF const & F);
json to_json(IntMatrix const & M);
json to_json(QuatAltPair const & P);
json to_json(SenaryAlt3 const & E);

// All parsers throw InputError on malformed input.
BQF bqf_from_json(json const & j);
Cube cube_from_json(json const & j);
BinaryCubic cubic_from_json(json const & j);
PairBQF pair_from_json(json const & j);
IntMatrix matrix_from_json(json const & j, std::size_t rows, std::size_t cols);
QuatAltPair quat_from_json(json const & j);
SenaryAlt3 senary_from_json(json const & j);

struct Envelope
{
    std::string space;
    std::optional<BigInt> discriminant;
    std::vector<json> objects;
    std::vector<json> witness;
    json expected = json::object();
};

json to_json(Envelope const & e);
Envelope envelope_from_json(json const & j);
Envelope parse_envelope(std::string const & text);
Envelope load_envelope(std::string const & path);

}  // namespace hcl

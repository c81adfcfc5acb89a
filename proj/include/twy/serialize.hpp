#pragma once

#include <string>

#include "json.hpp"
#include "twy/classify.hpp"
#include "twy/reps.hpp"

namespace twy {

using Json = nlohmann::json;

// Rationals are written as strings "p" or "p/q"; polynomials as ascending
// coefficient lists; rational functions as {"num": [...], "den": [...]}.
Json to_json(const Rat& r);
Json to_json(const Poly& p);
Json to_json(const RatFunc& f);
Json to_json(const PairType& p);
Json to_json(const WeightTuple& w);
Json to_json(const Certificate& c);
Json to_json(const Verdict& v);
Json to_json(const IdentityReport& r);
Json to_json(const Report& r);
Json to_json(const TwistedModule& m);
Json to_json(const XModule& x);
Json to_json(const MRResult& r);

// All readers throw ParseError on malformed input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rat rat_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
PairType pair_from_json(const Json& j);
WeightTuple weight_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
TwistedModule module_from_json(const Json& j);
XModule xmodule_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace twy

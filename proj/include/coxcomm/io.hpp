#pragma once

// JSON and DOT forms of the library types.
//
//   alphabet  {"symbols": ["a", ...], "commuting_pairs": [["a", "b"], ...]}
//   coxeter   {"generators": ["s1", ...], "matrix": [[1, 3], [3, 1]]}, 0 = infinity
//   scalar    {"coeffs": ["p/q", ...]}
//   lambda    [{"root": [scalar, ...], "value": k}, ...]
//   poset     {"size": k, "labels": [...], "covers": [[u, v], ...]}, 1-based

#include <string>

#include <json.hpp>

#include "coxcomm/commclass.hpp"
#include "coxcomm/coxeter.hpp"
#include "coxcomm/scalar.hpp"
#include "coxcomm/trace.hpp"

namespace coxcomm {

using json = nlohmann::json;

/// Reads a JSON document; InvalidInput on I/O or parse failure.
json read_json_file(const std::string& path);
/// Accepts inline JSON text when it starts with '{', otherwise a path.
json read_json_arg(const std::string& arg);

Alphabet alphabet_from_json(const json& j);
json to_json(const Alphabet& a);

CoxeterSystem coxeter_from_json(const json& j);
json to_json(const CoxeterSystem& sys);

json to_json(const Scalar& x);
Scalar scalar_from_json(const ScalarContext& ctx, const json& j);

json to_json(const RootVec& r);
RootVec root_from_json(const ScalarContext& ctx, const json& j);

json to_json(const LambdaFunction& lambda);
LambdaFunction lambda_from_json(const CoxeterSystem& sys, const json& j);

json poset_to_json(const WordPoset& p, const Alphabet& a);

/// Hasse diagram: node ids are 1-based positions labeled "pos:symbol",
/// edges point from lower to higher element of each cover.
std::string poset_to_dot(const WordPoset& p, const Alphabet& a);

} // namespace coxcomm

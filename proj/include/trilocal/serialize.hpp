#pragma once

// JSON forms: permutations are arrays of 1-based images, Weyl elements arrays
// of those, rationals "p/q" strings, matrices arrays of rows.

#include <json.hpp>

#include "trilocal/companion.hpp"
#include "trilocal/cycles.hpp"
#include "trilocal/flags.hpp"
#include "trilocal/kl.hpp"
#include "trilocal/matrix.hpp"
#include "trilocal/schubert.hpp"
#include "trilocal/weyl.hpp"

namespace trilocal {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& p);
Json to_json(const WeylElement& w);
Json to_json(const Rational& r);
Json to_json(const RationalMatrix& m);
Json to_json(const Flag& f);
Json to_json(const KLPolynomial& p);
Json to_json(const Cycle& c);
Json to_json(const Character& c);
Json to_json(const CompanionPoint& p);
Json to_json(const ProbeReport& r);
Json to_json(const TriangulineTangentReport& r);
Json to_json(const ReplayResult& r);
Json to_json(const std::map<WeylElement, BMTerm>& bm);

Permutation permutation_from_json(const Json& j);
WeylElement weyl_from_json(const Json& j, const EmbeddingShape& shape);
Rational rational_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
Flag flag_from_json(const Json& j);
// {n, sigma, h: [[...]], phi: ["p/q", ...], q}
CrystallineParam param_from_json(const Json& j);
// {"entries": [{"w": ..., "wp": ..., "value": k}]}
AMatrix amatrix_from_json(const Json& j, const EmbeddingShape& shape);

}  // namespace trilocal

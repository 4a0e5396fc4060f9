#pragma once

// JSON bridges for the CLI: exact integers are emitted as plain numbers
// up to 53-bit magnitude and as decimal strings beyond, so values survive
// double-based consumers.

#include "lstar/gale.hpp"
#include "lstar/geom.hpp"
#include "lstar/identities.hpp"
#include "lstar/polynomial.hpp"

#include <json.hpp>

namespace lstar {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int json_to_int(const Json& j);

Json vec_to_json(const Vec& v);
Vec json_to_vec(const Json& j);

Json vecs_to_json(const std::vector<Vec>& vs);
std::vector<Vec> json_to_vecs(const Json& j);

/// {"points": [[...], ...]}
PointConfiguration parse_point_configuration(const Json& j);

/// vertices, dim, ambient_dim, facets and span equations
Json polytope_to_json(const LatticePolytope& p);

Json report_to_json(const VerificationReport& r);

}  // namespace lstar

#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "curvopt/body.hpp"

namespace curvopt {

// Body specification documents look like
//   {"kind": "ball", "dim": 2, "radius": 1.0}
//   {"kind": "ellipsoid", "dim": 2, "shape": [[4,0],[0,1]]}
//   {"kind": "lp_ball", "dim": 2, "p": 1.5, "radius": 1.0}      (p may be "inf")
//   {"kind": "halfspace_polytope", "dim": 2, "rows": [[1,0],...], "offsets": [1,...]}
//   {"kind": "vertex_polytope", "dim": 2, "vertices": [[1,0],...]}
// The loader validates construction invariants and reports the first
// violated one in the thrown message.
ConvexBody body_from_json(const nlohmann::json& spec);
ConvexBody load_body(const std::string& path);
nlohmann::json body_to_json(const ConvexBody& body);

}  // namespace curvopt

#pragma once

#include <cstdint>

#include "nclkit/rational.hpp"

namespace nclkit {

// Constants attached to the surface of genus g with p punctures.
struct SurfaceParams {
    std::int64_t genus = 0;
    std::int64_t punctures = 0;
    std::int64_t xi = 0;                           // 3g - 3 + p, size of a maximal multicurve
    std::int64_t ncl_bound = 0;                    // 6g - 6 + 2p = NCL of the curve graph
    std::int64_t multipartite_bound = 0;           // l = g + floor((g+p)/2) - 1
    std::int64_t stability_k = 0;                  // 6g - 5 + 2p
    std::int64_t bipartite_half_graph_bound = 0;   // 2g + p
    Rational upper_density{0};                     // 1 - 1/l
    bool exceptional = false;                      // (0,5) and (1,2): upper density 0
};

// Throws invalid_input unless 2g + p > 2 and 3g + p >= 5. The rejected
// low-complexity surfaces (0,3), (0,4), (1,1) have curve graphs with no edges.
SurfaceParams surface_params(std::int64_t genus, std::int64_t punctures);

// 2 / (1 - delta), the least NCL compatible with upper density delta.
// Throws invalid_input unless 0 <= delta < 1.
Rational density_ncl_lower_bound(const Rational& delta);

}  // namespace nclkit

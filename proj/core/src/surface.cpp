#include "nclkit/surface.hpp"

#include <string>

#include "nclkit/error.hpp"

namespace nclkit {

SurfaceParams surface_params(std::int64_t genus, std::int64_t punctures) {
    const std::string label = "(g,p)=(" + std::to_string(genus) + "," + std::to_string(punctures) + ")";
    if (genus < 0 || punctures < 0) throw invalid_input(label + ": genus and punctures must be non-negative");
    if (genus > (std::int64_t{1} << 40) || punctures > (std::int64_t{1} << 40)) {
        throw invalid_input(label + ": parameters too large");
    }
    if (2 * genus + punctures <= 2) {
        throw invalid_input(label + ": surface is not hyperbolizable (need 2g+p > 2)");
    }
    if (3 * genus + punctures < 5) {
        throw invalid_input(label + ": low-complexity surface, its curve graph has no edges (need 3g+p >= 5)");
    }
    SurfaceParams s;
    s.genus = genus;
    s.punctures = punctures;
    s.xi = 3 * genus - 3 + punctures;
    s.ncl_bound = 2 * s.xi;
    s.multipartite_bound = genus + (genus + punctures) / 2 - 1;
    s.stability_k = 6 * genus - 5 + 2 * punctures;
    s.bipartite_half_graph_bound = 2 * genus + punctures;
    s.upper_density = Rational(1) - Rational(1, s.multipartite_bound);
    s.exceptional = (genus == 0 && punctures == 5) || (genus == 1 && punctures == 2);
    return s;
}

Rational density_ncl_lower_bound(const Rational& delta) {
    if (delta < Rational(0) || delta >= Rational(1)) {
        throw invalid_input("density " + to_string(delta) + " outside [0, 1); density-1 graphs need not have large NCL");
    }
    return Rational(2) / (Rational(1) - delta);
}

}  // namespace nclkit

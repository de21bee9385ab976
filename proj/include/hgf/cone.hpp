#ifndef HGF_CONE_HPP
#define HGF_CONE_HPP

#include <optional>
#include <vector>

#include "hgf/rational.hpp"

namespace hgf {

using NormalRow = std::vector<long long>;

/// Exact-rational polyhedral cone in H-representation. Rows are integer
/// normals v, primitive, meaning <v, w> > 0 (strict), >= 0 (nonstrict) or
/// = 0 (equalities). Rays, when cached, generate the closure.
struct Cone {
    int dim_ambient = 0;
    std::vector<NormalRow> strict;
    std::vector<NormalRow> nonstrict;
    std::vector<NormalRow> equalities;
    std::optional<std::vector<std::vector<ZZ>>> rays;

    /// Closure: every strict row demoted to nonstrict.
    Cone closure() const;
};

/// Rows of the open cone W = {0 < w0 < w1 < ... < wn} (strict) or of its
/// closure (nonstrict callers reuse the same normals).
std::vector<NormalRow> cone_w_rows(int nvars);

/// Asserts whether a point satisfies the cone constraints (strict rows
/// strictly).
bool cone_contains(const Cone& c, const std::vector<ZZ>& point);
bool cone_closure_contains(const Cone& c, const std::vector<ZZ>& point);

/// Exact LP realization of open-cone membership: maximize t subject to
/// <v,w> >= t (strict rows), <v,w> >= 0, <v,w> = 0, sum w = dim, t <= 1.
/// Optimum t > 0 yields an interior point, cleared to a primitive integer
/// vector; infeasibility or t <= 0 yields nullopt.
std::optional<std::vector<ZZ>> strict_feasible(const Cone& c);

/// Extreme rays of a closure H-representation by double description: seeded
/// with the simplicial cone W-bar (whose rows must be present among the
/// input rows), remaining halfspaces inserted one at a time maintaining ray
/// adjacency. Output is primitive, deduplicated, sorted. Throws EmptyCone
/// when the cone is reduced to the origin.
std::vector<std::vector<ZZ>> cone_rays(const Cone& c);

} // namespace hgf

#endif

#ifndef HGF_FAN_HPP
#define HGF_FAN_HPP

#include <vector>

#include "hgf/adjacency.hpp"
#include "hgf/cone.hpp"
#include "hgf/orders.hpp"

namespace hgf {

/// A maximal cone of the Groebner fan: the sign vector over the deduplicated
/// normals, the closure H-representation (W-bar rows plus signed normals),
/// and a primitive integer interior point.
struct MaximalCone {
    std::vector<int8_t> signs; // +1 / -1 per normal
    Cone closure;
    std::vector<ZZ> interior;
};

struct GFan {
    int nvars = 0;
    /// Deduplicated primitive edge normals (sign-normalized: first nonzero
    /// entry positive).
    std::vector<NormalRow> normals;
    /// Per Borel-graph edge: (normal index, sign) with
    /// a - a' = sign * normals[index].
    std::vector<std::pair<int, int>> edge_normal;
    /// Maximal cones in lexicographic sign-vector order (+ before -).
    std::vector<MaximalCone> cones;

    /// Sign pattern of a point against the normals: +1/0/-1 per normal.
    std::vector<int8_t> sign_pattern(const std::vector<ZZ>& point) const;
    /// Index of the maximal cone with exactly this (zero-free) pattern, or -1.
    int cone_of(const std::vector<int8_t>& pattern) const;

    /// Edge orientation inside a given cone: Forward iff the edge normal is
    /// positive there.
    EdgeState edge_state_in_cone(std::size_t edge, const MaximalCone& mc) const;
};

/// Cell enumeration of the normal arrangement restricted to the open cone W:
/// DFS over sign assignments with incremental strict feasibility (witness
/// points certify most branches without an LP solve). The parallel version
/// fans the first levels of the sign tree out to OpenMP tasks; both produce
/// the same fan.
GFan groebner_fan_serial(const BorelGraph& g);
GFan groebner_fan(const BorelGraph& g, int jobs = 0);

/// Union of the extreme rays of all maximal-cone closures, deduplicated and
/// sorted. Rays are cached inside the fan's cones when computed.
std::vector<std::vector<ZZ>> fan_rays(GFan& f, int jobs = 0);

/// Intersection of each maximal cone with the drawing plane:
/// n = 2: w0 + w1 + w2 = 1, coordinates (w1, w2);
/// n = 3: w0 = 0, w1 + w2 + w3 = 1, coordinates (w2, w3).
struct SlicePolygon {
    int cone_index;
    std::vector<std::pair<QQ, QQ>> vertices; // convex positional order
};

std::vector<SlicePolygon> slice(const GFan& f);

} // namespace hgf

#endif

#ifndef HGF_ANALYSIS_HPP
#define HGF_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgf/fan.hpp"

namespace hgf {

/// Borel-adjacent dominating ideal: an ideal I with I > J in the
/// degeneration order under M, produced by the segment-driven swap
/// procedure (shrink-and-retry on failure). L must be the hilb-segment
/// ideal of M within the enumeration.
StronglyStableIdeal dominating_adjacent(const StronglyStableIdeal& J,
                                        const StronglyStableIdeal& L,
                                        const TermOrderMatrix& M);

/// Spanning tree of the Borel graph rooted at the hilb-segment ideal;
/// parent(J) = dominating_adjacent(J, L, M).
struct SpanningTree {
    int root = -1;
    std::map<int, int> parent; // child id -> parent id
    std::string order;         // comparator provenance
};

SpanningTree spanning_tree(const std::vector<StronglyStableIdeal>& ideals,
                           const TermOrderMatrix& M);

/// Strict cone of weights under which J has no incoming degeneration edge:
/// W rows plus one oriented normal per incident Borel-graph edge.
Cone maximality_cone(const StronglyStableIdeal& J, const BorelGraph& g);

/// Strict cone of weights making J a segment: W rows plus a - b over the
/// Borel-extremal pairs.
Cone segment_cone(const StronglyStableIdeal& J);

/// J is irregular when its maximality cone strictly exceeds its segment
/// cone; decided by one slack-LP per segment-cone row.
bool is_irregular(const StronglyStableIdeal& J, const BorelGraph& g);

/// Partition of the ideals by hyperplane section (set equality of the
/// saturated generators in K[x1..xn]); groups ordered by decreasing size,
/// then by section key.
struct SectionGroup {
    SaturatedGenerators section;
    std::vector<int> ideal_ids;
};

std::vector<SectionGroup> hyperplane_section_groups(const std::vector<StronglyStableIdeal>& ideals);

/// Inclusion-maximal sets of irregular ideals with nonempty intersection of
/// maximality cones. At most one ideal per hyperplane-section group can
/// appear (different sections are necessary); the branch and bound tests
/// joint strict feasibility incrementally.
struct IntersectionSet {
    std::vector<int> ideal_ids;   // sorted
    std::vector<ZZ> witness;      // interior point of the intersection
};

std::vector<IntersectionSet> irregular_intersection_search(
    const std::vector<StronglyStableIdeal>& ideals, const BorelGraph& g);

/// Per-cone source and certified double-order maxima counts over the fan.
struct ConeRecord {
    int cone = -1;
    std::vector<ZZ> interior;
    int source_count = 0;
    int double_max_count = 0;     // best over the supplied tiebreaks
    std::string tiebreak;         // which tiebreak attained it
    std::vector<int> sources;     // vertex ids
    std::vector<int> double_maxima;
};

struct ComponentBoundReport {
    std::vector<ConeRecord> cones;
    int m_sources = 0;   // max source count (the bound under the conjecture)
    int m_certified = 0; // max double-order maxima count (unconditional)
    std::vector<int> witness_ideals; // double maxima of the best cone
    std::vector<int> conjecture_gap; // cones where certified < sources
};

ComponentBoundReport component_lower_bound(const std::vector<StronglyStableIdeal>& ideals,
                                           const BorelGraph& g, const GFan& f,
                                           const std::vector<TermOrderMatrix>& tiebreaks,
                                           int jobs = 0);

/// Certified count for a single weight vector: sources of the w-graph and
/// the double-order maxima under [w; tiebreak]. Used by the 7t-5 style
/// analysis that avoids the full fan.
struct WeightCertificate {
    std::vector<int> sources;
    std::vector<int> double_maxima;
};

WeightCertificate certify_weight(const std::vector<StronglyStableIdeal>& ideals,
                                 const BorelGraph& g, const std::vector<ZZ>& w,
                                 const TermOrderMatrix& tiebreak);

} // namespace hgf

#endif

#ifndef HGF_IO_HPP
#define HGF_IO_HPP

#include <json.hpp>
#include <string>

#include "hgf/analysis.hpp"

namespace hgf {

using json = nlohmann::ordered_json;

// Monomials serialize as plain exponent arrays; exact rationals and big
// integers as decimal strings.
json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json ideal_to_json(const StronglyStableIdeal& J);
StronglyStableIdeal ideal_from_json(const json& j);

json sat_to_json(const SaturatedGenerators& s);

json graph_to_json(const BorelGraph& g);
BorelGraph graph_from_json(const json& j);

json degeneration_to_json(const DegenerationGraph& dg);

json fan_to_json(const GFan& f);
json slice_to_json(const std::vector<SlicePolygon>& polys);
json spanning_tree_to_json(const SpanningTree& t, const std::vector<StronglyStableIdeal>& ideals);
json report_to_json(const ComponentBoundReport& rep, const std::vector<StronglyStableIdeal>& ideals);
json mcones_to_json(const std::vector<StronglyStableIdeal>& ideals, const BorelGraph& g);

std::string graph_to_dot(const BorelGraph& g);
std::string degeneration_to_dot(const DegenerationGraph& dg);
std::string spanning_tree_to_dot(const SpanningTree& t, const BorelGraph& g);

std::string fan_to_csv(const GFan& f, const std::vector<std::vector<ZZ>>& rays);
std::string report_to_csv(const ComponentBoundReport& rep);

std::string slice_to_svg(const std::vector<SlicePolygon>& polys);

} // namespace hgf

#endif

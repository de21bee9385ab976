#include "hgf/io.hpp"

#include <algorithm>
#include <cstdio>

#include "hgf/errors.hpp"

namespace hgf {

json monomial_to_json(const Monomial& m)
{
    return json(m.exps);
}

Monomial monomial_from_json(const json& j)
{
    return Monomial(j.get<std::vector<int>>());
}

json unipoly_to_json(const UniPoly& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(to_string(c));
    return json{{"coeffs", coeffs}};
}

UniPoly unipoly_from_json(const json& j)
{
    std::vector<QQ> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return UniPoly(std::move(coeffs));
}

json ideal_to_json(const StronglyStableIdeal& J)
{
    json gens = json::array();
    for (const auto& m : J.gens()) gens.push_back(monomial_to_json(m));
    json sat = json::array();
    for (const auto& m : saturate(J).gens) sat.push_back(monomial_to_json(m));
    return json{{"n", J.ctx->n}, {"r", J.ctx->r}, {"id", J.id}, {"gens", gens}, {"sat", sat}};
}

StronglyStableIdeal ideal_from_json(const json& j)
{
    const int n = j.at("n").get<int>();
    const long r = j.at("r").get<long>();
    auto ctx = DegreeContext::make(n, r);
    StronglyStableIdeal J;
    J.ctx = ctx;
    J.members.resize(ctx->size());
    for (const auto& g : j.at("gens")) {
        int idx = ctx->index_of(monomial_from_json(g));
        if (idx < 0) throw Error("ideal_from_json: generator outside T^n_r");
        J.members.set(idx);
    }
    if (j.contains("id")) J.id = j.at("id").get<int>();
    J.level_counts.assign(n + 1, 0);
    for (std::size_t i = J.members.find_first(); i != MonomialSet::npos;
         i = J.members.find_next(i))
        ++J.level_counts[ctx->min_var_of[i]];
    return J;
}

json sat_to_json(const SaturatedGenerators& s)
{
    json gens = json::array();
    for (const auto& m : s.gens) gens.push_back(monomial_to_json(m));
    return json{{"var_offset", s.var_offset}, {"gens", gens}, {"text", s.str()}};
}

namespace {

json label_to_json(const EdgeLabel& l)
{
    json offsets = json::array();
    for (const auto& o : l.offsets) offsets.push_back(json(o.delta));
    return json{{"a", monomial_to_json(l.a)},
                {"a_prime", monomial_to_json(l.a_prime)},
                {"offsets", offsets},
                {"size", l.size}};
}

EdgeLabel label_from_json(const json& j)
{
    EdgeLabel l;
    l.a = monomial_from_json(j.at("a"));
    l.a_prime = monomial_from_json(j.at("a_prime"));
    for (const auto& o : j.at("offsets")) l.offsets.emplace_back(o.get<std::vector<int>>());
    l.size = j.at("size").get<std::size_t>();
    return l;
}

} // namespace

json graph_to_json(const BorelGraph& g)
{
    json vertices = json::array();
    for (const auto& v : g.vertices) vertices.push_back(ideal_to_json(v));
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json{{"i", e.i}, {"j", e.j}, {"label", label_to_json(e.label)}});
    return json{{"vertices", vertices}, {"edges", edges}};
}

BorelGraph graph_from_json(const json& j)
{
    BorelGraph g;
    for (const auto& v : j.at("vertices")) g.vertices.push_back(ideal_from_json(v));
    // Share one context across vertices.
    for (std::size_t i = 1; i < g.vertices.size(); ++i) g.vertices[i].ctx = g.vertices[0].ctx;
    for (const auto& e : j.at("edges")) {
        BorelEdge be;
        be.i = e.at("i").get<int>();
        be.j = e.at("j").get<int>();
        be.label = label_from_json(e.at("label"));
        g.edges.push_back(std::move(be));
    }
    return g;
}

json degeneration_to_json(const DegenerationGraph& dg)
{
    json states = json::array();
    for (std::size_t k = 0; k < dg.states.size(); ++k) {
        const char* s = dg.states[k] == EdgeState::Forward    ? "forward"
                        : dg.states[k] == EdgeState::Backward ? "backward"
                                                              : "undirected";
        states.push_back(s);
    }
    json out = graph_to_json(*dg.base);
    out["comparator"] = dg.comparator;
    out["states"] = states;
    return out;
}

namespace {

json zz_vector_to_json(const std::vector<ZZ>& v)
{
    json out = json::array();
    for (const auto& z : v) out.push_back(to_string(z));
    return out;
}

json normal_to_json(const NormalRow& v)
{
    return json(v);
}

json cone_to_json(const Cone& c)
{
    json out;
    out["strict"] = json::array();
    for (const auto& v : c.strict) out["strict"].push_back(normal_to_json(v));
    out["nonstrict"] = json::array();
    for (const auto& v : c.nonstrict) out["nonstrict"].push_back(normal_to_json(v));
    out["equalities"] = json::array();
    for (const auto& v : c.equalities) out["equalities"].push_back(normal_to_json(v));
    if (c.rays) {
        out["rays"] = json::array();
        for (const auto& r : *c.rays) out["rays"].push_back(zz_vector_to_json(r));
    }
    return out;
}

} // namespace

json fan_to_json(const GFan& f)
{
    json normals = json::array();
    for (const auto& v : f.normals) normals.push_back(normal_to_json(v));
    json cones = json::array();
    for (const auto& mc : f.cones) {
        json signs = json::array();
        for (int8_t s : mc.signs) signs.push_back(static_cast<int>(s));
        cones.push_back(json{{"signs", signs},
                             {"interior", zz_vector_to_json(mc.interior)},
                             {"closure", cone_to_json(mc.closure)}});
    }
    return json{{"nvars", f.nvars}, {"normals", normals}, {"cones", cones}};
}

json slice_to_json(const std::vector<SlicePolygon>& polys)
{
    json out = json::array();
    for (const auto& p : polys) {
        json verts = json::array();
        for (const auto& [x, y] : p.vertices)
            verts.push_back(json::array({to_string(x), to_string(y)}));
        out.push_back(json{{"cone", p.cone_index}, {"vertices", verts}});
    }
    return out;
}

json spanning_tree_to_json(const SpanningTree& t, const std::vector<StronglyStableIdeal>& ideals)
{
    json edges = json::array();
    for (const auto& [child, parent] : t.parent)
        edges.push_back(json{{"parent", parent},
                             {"child", child},
                             {"parent_sat", saturate(ideals[parent]).str()},
                             {"child_sat", saturate(ideals[child]).str()}});
    return json{{"root", t.root},
                {"root_sat", saturate(ideals[t.root]).str()},
                {"order", t.order},
                {"edges", edges}};
}

json report_to_json(const ComponentBoundReport& rep, const std::vector<StronglyStableIdeal>& ideals)
{
    json cones = json::array();
    for (const auto& rec : rep.cones) {
        cones.push_back(json{{"cone", rec.cone},
                             {"interior", zz_vector_to_json(rec.interior)},
                             {"sources", rec.sources},
                             {"source_count", rec.source_count},
                             {"double_max_count", rec.double_max_count},
                             {"double_maxima", rec.double_maxima}});
    }
    json witnesses = json::array();
    for (int id : rep.witness_ideals) witnesses.push_back(saturate(ideals[id]).str());
    return json{{"m_sources", rep.m_sources},
                {"m_certified", rep.m_certified},
                {"witness_ideals", rep.witness_ideals},
                {"witness_saturations", witnesses},
                {"conjecture_gap", rep.conjecture_gap},
                {"cones", cones}};
}

json mcones_to_json(const std::vector<StronglyStableIdeal>& ideals, const BorelGraph& g)
{
    json out = json::array();
    for (const auto& J : ideals) {
        Cone mc = maximality_cone(J, g);
        Cone sc = segment_cone(J);
        auto mc_point = strict_feasible(mc);
        auto sc_point = strict_feasible(sc);
        json rec{{"id", J.id},
                 {"sat", saturate(J).str()},
                 {"mc_empty", !mc_point.has_value()},
                 {"sc_empty", !sc_point.has_value()},
                 {"irregular", is_irregular(J, g)}};
        if (mc_point) {
            rec["mc_interior"] = zz_vector_to_json(*mc_point);
            auto rays = cone_rays(mc.closure());
            json jr = json::array();
            for (const auto& r : rays) jr.push_back(zz_vector_to_json(r));
            rec["mc_rays"] = jr;
        }
        out.push_back(std::move(rec));
    }
    json sets = json::array();
    for (const auto& s : irregular_intersection_search(ideals, g)) {
        json ids = json(s.ideal_ids);
        json sats = json::array();
        for (int id : s.ideal_ids) sats.push_back(saturate(ideals[id]).str());
        sets.push_back(json{{"ideals", ids}, {"saturations", sats},
                            {"witness", zz_vector_to_json(s.witness)}});
    }
    return json{{"ideals", out}, {"maximal_intersections", sets}};
}

namespace {

std::string edge_label_text(const EdgeLabel& l)
{
    return format_monomial(l.a) + " ⇋ " + format_monomial(l.a_prime);
}

} // namespace

std::string graph_to_dot(const BorelGraph& g)
{
    std::string out = "graph borel {\n";
    for (const auto& v : g.vertices)
        out += "  J" + std::to_string(v.id) + " [label=\"J" + std::to_string(v.id) + " = " +
               saturate(v).str() + "\"];\n";
    for (const auto& e : g.edges)
        out += "  J" + std::to_string(e.i) + " -- J" + std::to_string(e.j) + " [label=\"" +
               edge_label_text(e.label) + "\"];\n";
    return out + "}\n";
}

std::string degeneration_to_dot(const DegenerationGraph& dg)
{
    const BorelGraph& g = *dg.base;
    std::string out = "digraph degeneration {\n";
    for (const auto& v : g.vertices)
        out += "  J" + std::to_string(v.id) + " [label=\"J" + std::to_string(v.id) + " = " +
               saturate(v).str() + "\"];\n";
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto& e = g.edges[k];
        std::string attrs = " [label=\"" + edge_label_text(e.label) + "\"";
        if (dg.states[k] == EdgeState::Forward) {
            out += "  J" + std::to_string(e.i) + " -> J" + std::to_string(e.j) + attrs + "];\n";
        } else if (dg.states[k] == EdgeState::Backward) {
            out += "  J" + std::to_string(e.j) + " -> J" + std::to_string(e.i) + attrs + "];\n";
        } else {
            out += "  J" + std::to_string(e.i) + " -> J" + std::to_string(e.j) + attrs +
                   ", dir=none, style=dotted];\n";
        }
    }
    return out + "}\n";
}

std::string spanning_tree_to_dot(const SpanningTree& t, const BorelGraph& g)
{
    std::string out = "digraph spanning_tree {\n";
    for (const auto& v : g.vertices) {
        std::string shape = v.id == t.root ? ", shape=box" : "";
        out += "  J" + std::to_string(v.id) + " [label=\"J" + std::to_string(v.id) + " = " +
               saturate(v).str() + "\"" + shape + "];\n";
    }
    for (const auto& [child, parent] : t.parent) {
        const BorelEdge* e = g.find_edge(parent, child);
        std::string label = e ? edge_label_text(parent == e->i ? e->label : e->label.swapped())
                              : std::string();
        out += "  J" + std::to_string(parent) + " -> J" + std::to_string(child) +
               " [label=\"" + label + "\"];\n";
    }
    return out + "}\n";
}

std::string fan_to_csv(const GFan& f, const std::vector<std::vector<ZZ>>& rays)
{
    return std::to_string(f.cones.size()) + "," + std::to_string(rays.size()) + "\n";
}

std::string report_to_csv(const ComponentBoundReport& rep)
{
    std::string out = "cone,sources,certified\n";
    for (const auto& rec : rep.cones)
        out += std::to_string(rec.cone) + "," + std::to_string(rec.source_count) + "," +
               std::to_string(rec.double_max_count) + "\n";
    return out;
}

std::string slice_to_svg(const std::vector<SlicePolygon>& polys)
{
    // Rational coordinates only become floating point here, at the drawing
    // boundary.
    double minx = 0, miny = 0, maxx = 1, maxy = 1;
    bool first = true;
    for (const auto& p : polys)
        for (const auto& [x, y] : p.vertices) {
            double dx = x.convert_to<double>(), dy = y.convert_to<double>();
            if (first) {
                minx = maxx = dx;
                miny = maxy = dy;
                first = false;
            }
            minx = std::min(minx, dx);
            maxx = std::max(maxx, dx);
            miny = std::min(miny, dy);
            maxy = std::max(maxy, dy);
        }
    const double S = 640.0;
    double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
    double scale = S / std::max(w, h);

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"660\" height=\"660\" "
                      "viewBox=\"0 0 660 660\">\n";
    for (const auto& p : polys) {
        if (p.vertices.size() < 3) continue;
        svg += "  <polygon points=\"";
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            double dx = (p.vertices[i].first.convert_to<double>() - minx) * scale + 10;
            double dy = 650 - ((p.vertices[i].second.convert_to<double>() - miny) * scale + 10);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", i ? " " : "", dx, dy);
            svg += buf;
        }
        svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace hgf

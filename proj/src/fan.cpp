#include "hgf/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <omp.h>
#include <set>

#include "hgf/errors.hpp"

namespace hgf {

namespace {

ZZ dot(const NormalRow& v, const std::vector<ZZ>& p)
{
    ZZ s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += ZZ(v[i]) * p[i];
    return s;
}

// Deduplicate edge normals a - a' into primitive sign-normalized vectors.
void collect_normals(const BorelGraph& g, int nvars, std::vector<NormalRow>& normals,
                     std::vector<std::pair<int, int>>& edge_normal)
{
    std::map<NormalRow, int> index;
    for (const auto& e : g.edges) {
        NormalRow v(nvars);
        for (int i = 0; i < nvars; ++i)
            v[i] = e.label.a.exps[i] - e.label.a_prime.exps[i];
        v = primitive_vector(v);
        int sign = 1;
        for (long long x : v) {
            if (x == 0) continue;
            if (x < 0) {
                sign = -1;
                for (long long& y : v) y = -y;
            }
            break;
        }
        auto [it, inserted] = index.try_emplace(v, static_cast<int>(normals.size()));
        if (inserted) normals.push_back(v);
        edge_normal.emplace_back(it->second, sign);
    }
}

struct FanDFS {
    const std::vector<NormalRow>* normals;
    int nvars;
    std::vector<MaximalCone> cones;

    Cone base_cone(const std::vector<int8_t>& signs, std::size_t depth) const
    {
        Cone c;
        c.dim_ambient = nvars;
        c.strict = cone_w_rows(nvars);
        for (std::size_t k = 0; k < depth; ++k) {
            NormalRow row = (*normals)[k];
            if (signs[k] < 0)
                for (long long& x : row) x = -x;
            c.strict.push_back(std::move(row));
        }
        return c;
    }

    void explore(std::vector<int8_t>& signs, std::size_t depth, std::vector<ZZ> witness)
    {
        if (depth == normals->size()) {
            MaximalCone mc;
            mc.signs = signs;
            mc.interior = std::move(witness);
            mc.closure.dim_ambient = nvars;
            mc.closure.nonstrict = cone_w_rows(nvars);
            for (std::size_t k = 0; k < depth; ++k) {
                NormalRow row = (*normals)[k];
                if (signs[k] < 0)
                    for (long long& x : row) x = -x;
                mc.closure.nonstrict.push_back(std::move(row));
            }
            cones.push_back(std::move(mc));
            return;
        }
        ZZ v = dot((*normals)[depth], witness);
        for (int8_t s : {int8_t(+1), int8_t(-1)}) {
            signs[depth] = s;
            // The inherited witness certifies the branch when it is strictly
            // on the right side; otherwise one LP decides.
            if ((s > 0 && v > 0) || (s < 0 && v < 0)) {
                explore(signs, depth + 1, witness);
            } else {
                auto point = strict_feasible(base_cone(signs, depth + 1));
                if (point) explore(signs, depth + 1, std::move(*point));
            }
        }
        signs[depth] = 0;
    }
};

GFan assemble(const BorelGraph& g, int nvars, std::vector<NormalRow> normals,
              std::vector<std::pair<int, int>> edge_normal, std::vector<MaximalCone> cones)
{
    GFan f;
    f.nvars = nvars;
    f.normals = std::move(normals);
    f.edge_normal = std::move(edge_normal);
    std::sort(cones.begin(), cones.end(), [](const MaximalCone& a, const MaximalCone& b) {
        return a.signs < b.signs; // +1 > -1, so lexicographic on +/-
    });
    f.cones = std::move(cones);
    (void)g;
    return f;
}

} // namespace

GFan groebner_fan_serial(const BorelGraph& g)
{
    if (g.vertices.empty()) throw Error("groebner_fan: empty graph");
    const int nvars = g.vertices[0].ctx->n + 1;
    std::vector<NormalRow> normals;
    std::vector<std::pair<int, int>> edge_normal;
    collect_normals(g, nvars, normals, edge_normal);

    FanDFS dfs;
    dfs.normals = &normals;
    dfs.nvars = nvars;
    Cone w;
    w.dim_ambient = nvars;
    w.strict = cone_w_rows(nvars);
    auto point = strict_feasible(w);
    if (!point) throw Error("groebner_fan: W infeasible");
    std::vector<int8_t> signs(normals.size(), 0);
    dfs.explore(signs, 0, std::move(*point));
    return assemble(g, nvars, std::move(normals), std::move(edge_normal), std::move(dfs.cones));
}

GFan groebner_fan(const BorelGraph& g, int jobs)
{
    if (g.vertices.empty()) throw Error("groebner_fan: empty graph");
    const int nvars = g.vertices[0].ctx->n + 1;
    std::vector<NormalRow> normals;
    std::vector<std::pair<int, int>> edge_normal;
    collect_normals(g, nvars, normals, edge_normal);

    // Expand a frontier of feasible sign prefixes breadth-first until there
    // are enough independent subtrees to keep the workers busy, then let
    // each worker finish its subtrees depth-first.
    struct Seed {
        std::vector<int8_t> signs;
        std::size_t depth;
        std::vector<ZZ> witness;
    };
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const std::size_t want = static_cast<std::size_t>(threads) * 32;

    Cone w;
    w.dim_ambient = nvars;
    w.strict = cone_w_rows(nvars);
    auto root_point = strict_feasible(w);
    if (!root_point) throw Error("groebner_fan: W infeasible");
    std::deque<Seed> frontier;
    frontier.push_back({std::vector<int8_t>(normals.size(), 0), 0, std::move(*root_point)});

    FanDFS splitter;
    splitter.normals = &normals;
    splitter.nvars = nvars;
    while (!frontier.empty() && frontier.size() < want &&
           frontier.front().depth < normals.size()) {
        Seed seed = std::move(frontier.front());
        frontier.pop_front();
        ZZ v = dot(normals[seed.depth], seed.witness);
        for (int8_t s : {int8_t(+1), int8_t(-1)}) {
            Seed child;
            child.signs = seed.signs;
            child.signs[seed.depth] = s;
            child.depth = seed.depth + 1;
            if ((s > 0 && v > 0) || (s < 0 && v < 0)) {
                child.witness = seed.witness;
                frontier.push_back(std::move(child));
            } else if (auto p = strict_feasible(splitter.base_cone(child.signs, child.depth))) {
                child.witness = std::move(*p);
                frontier.push_back(std::move(child));
            }
        }
    }

    std::vector<Seed> seeds(std::make_move_iterator(frontier.begin()),
                            std::make_move_iterator(frontier.end()));
    std::vector<std::vector<MaximalCone>> partial(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(seeds.size()); ++t) {
        FanDFS dfs;
        dfs.normals = &normals;
        dfs.nvars = nvars;
        dfs.explore(seeds[t].signs, seeds[t].depth, std::move(seeds[t].witness));
        partial[t] = std::move(dfs.cones);
    }
    std::vector<MaximalCone> cones;
    for (auto& p : partial)
        for (auto& mc : p) cones.push_back(std::move(mc));
    return assemble(g, nvars, std::move(normals), std::move(edge_normal), std::move(cones));
}

std::vector<int8_t> GFan::sign_pattern(const std::vector<ZZ>& point) const
{
    std::vector<int8_t> out(normals.size());
    for (std::size_t k = 0; k < normals.size(); ++k) {
        ZZ v = dot(normals[k], point);
        out[k] = v > 0 ? 1 : v < 0 ? -1 : 0;
    }
    return out;
}

int GFan::cone_of(const std::vector<int8_t>& pattern) const
{
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (cones[i].signs == pattern) return static_cast<int>(i);
    return -1;
}

EdgeState GFan::edge_state_in_cone(std::size_t edge, const MaximalCone& mc) const
{
    auto [idx, sign] = edge_normal[edge];
    return sign * mc.signs[idx] > 0 ? EdgeState::Forward : EdgeState::Backward;
}

std::vector<std::vector<ZZ>> fan_rays(GFan& f, int jobs)
{
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(f.cones.size()); ++i) {
        if (!f.cones[i].closure.rays)
            f.cones[i].closure.rays = cone_rays(f.cones[i].closure);
    }
    std::set<std::vector<ZZ>> unique;
    for (const auto& mc : f.cones)
        for (const auto& r : *mc.closure.rays) unique.insert(r);
    return {unique.begin(), unique.end()};
}

namespace {

// Positional (counterclockwise) order of a convex polygon's vertices using
// exact orientation predicates around the centroid.
std::vector<std::pair<QQ, QQ>> order_convex(std::vector<std::pair<QQ, QQ>> pts)
{
    if (pts.size() <= 2) return pts;
    QQ cx = 0, cy = 0;
    for (auto& [x, y] : pts) {
        cx += x;
        cy += y;
    }
    cx /= static_cast<int>(pts.size());
    cy /= static_cast<int>(pts.size());
    auto half = [&](const std::pair<QQ, QQ>& p) {
        QQ dx = p.first - cx, dy = p.second - cy;
        // 0: upper half (dy > 0, or dy == 0 and dx > 0); 1: lower half.
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        QQ cross = (p.first - cx) * (q.second - cy) - (q.first - cx) * (p.second - cy);
        return cross > 0;
    });
    return pts;
}

} // namespace

std::vector<SlicePolygon> slice(const GFan& f)
{
    const int n = f.nvars - 1;
    if (n != 2 && n != 3)
        throw UnsupportedDimension("slice is defined for n = 2 and n = 3 only");

    std::vector<SlicePolygon> out;
    for (std::size_t ci = 0; ci < f.cones.size(); ++ci) {
        const MaximalCone& mc = f.cones[ci];
        std::vector<std::vector<ZZ>> rays;
        if (n == 2) {
            rays = mc.closure.rays ? *mc.closure.rays : cone_rays(mc.closure);
        } else {
            // Intersect with w0 = 0 first.
            Cone cut = mc.closure;
            NormalRow e0(f.nvars, 0);
            e0[0] = 1;
            cut.equalities.push_back(std::move(e0));
            cut.rays.reset();
            try {
                rays = cone_rays(cut);
            } catch (const EmptyCone&) {
                rays.clear();
            }
        }
        SlicePolygon poly;
        poly.cone_index = static_cast<int>(ci);
        std::vector<std::pair<QQ, QQ>> pts;
        for (const auto& r : rays) {
            ZZ total = 0;
            for (int i = n == 2 ? 0 : 1; i < f.nvars; ++i) total += r[i];
            if (total == 0) continue; // the (1,..,1) direction leaves the n=3 plane
            if (n == 2)
                pts.emplace_back(QQ(r[1], total), QQ(r[2], total));
            else
                pts.emplace_back(QQ(r[2], total), QQ(r[3], total));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        poly.vertices = order_convex(std::move(pts));
        out.push_back(std::move(poly));
    }
    return out;
}

} // namespace hgf

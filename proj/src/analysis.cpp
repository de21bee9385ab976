#include "hgf/analysis.hpp"

#include <algorithm>
#include <map>
#include <omp.h>
#include <set>

#include "hgf/errors.hpp"

namespace hgf {

namespace {

std::vector<int> member_ranks(const MonomialSet& s)
{
    std::vector<int> out;
    out.reserve(s.count());
    for (std::size_t i = s.find_first(); i != MonomialSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

} // namespace

StronglyStableIdeal dominating_adjacent(const StronglyStableIdeal& J,
                                        const StronglyStableIdeal& L,
                                        const TermOrderMatrix& M)
{
    if (J.members == L.members)
        throw SameIdeal("dominating_adjacent: J equals the segment ideal");
    if (!is_hilb_segment(L, M))
        throw NotSegment("dominating_adjacent: L is not the hilb-segment ideal of this order");

    const DegreeContext& ctx = *J.ctx;
    TermOrderRanking ranking(J.ctx, M);

    MonomialSet A = L.members - J.members; // \mathfrak{A}
    MonomialSet B = J.members - L.members; // \mathfrak{B}

    std::size_t guard = A.count() + 1;
    while (guard--) {
        // Step 1: x^a = Omega-max of A; x^b = Omega-min of B_k, k = min x^a.
        int a = -1;
        for (int rank : member_ranks(A))
            if (a < 0 || ranking.rank_of(rank) < ranking.rank_of(a)) a = rank;
        if (a < 0) break;
        const int k = ctx.min_var_of[a];
        int b = -1;
        for (int rank : member_ranks(B)) {
            if (ctx.min_var_of[rank] != k) continue;
            if (b < 0 || ranking.rank_of(rank) > ranking.rank_of(b)) b = rank;
        }
        if (b < 0)
            throw Error("dominating_adjacent: B_k empty (violates the level-count invariant)");

        // Step 2: the inner border below x^b and its displacement set.
        std::vector<int> inner;
        std::vector<std::vector<int>> offsets;
        for (int rank : member_ranks(B)) {
            BorelRel rel = borel_compare(ctx.monomials[b], ctx.monomials[rank]);
            if (rel == BorelRel::Greater || rel == BorelRel::Equal) {
                inner.push_back(rank);
                std::vector<int> d(ctx.n + 1);
                for (int i = 0; i <= ctx.n; ++i)
                    d[i] = ctx.monomials[rank].exps[i] - ctx.monomials[b].exps[i];
                offsets.push_back(std::move(d));
            }
        }

        // (dagger): every displacement admissible for x^a.
        bool ok = true;
        std::vector<int> swapped; // \mathfrak{F}
        for (const auto& o : offsets) {
            std::vector<int> e = ctx.monomials[a].exps;
            bool valid = true;
            for (int i = 0; i <= ctx.n; ++i) {
                e[i] += o[i];
                if (e[i] < 0) valid = false;
            }
            int idx = valid ? ctx.index_of(e) : -1;
            if (idx < 0 || J.members.test(idx)) { ok = false; break; }
            swapped.push_back(idx);
        }
        // (ddagger): the swapped set is an outer border of J.
        if (ok) {
            std::set<int> fset(swapped.begin(), swapped.end());
            for (int f : swapped) {
                for (int im : ctx.up_moves[f])
                    if (!J.members.test(im) && !fset.count(im)) { ok = false; break; }
                if (!ok) break;
            }
        }
        if (ok) {
            StronglyStableIdeal I;
            I.ctx = J.ctx;
            I.members = J.members;
            for (int rank : inner) I.members.reset(rank);
            for (int rank : swapped) I.members.set(rank);
            I.level_counts = J.level_counts;
            return I;
        }

        // Step 3: shrink A by the down-set of x^a and retry.
        for (int rank : member_ranks(A)) {
            BorelRel rel = borel_compare(ctx.monomials[a], ctx.monomials[rank]);
            if (rel == BorelRel::Greater || rel == BorelRel::Equal) A.reset(rank);
        }
    }
    throw Error("dominating_adjacent: procedure failed to terminate");
}

SpanningTree spanning_tree(const std::vector<StronglyStableIdeal>& ideals,
                           const TermOrderMatrix& M)
{
    int root = -1;
    for (const auto& J : ideals)
        if (is_hilb_segment(J, M)) {
            root = J.id;
            break;
        }
    if (root < 0)
        throw NoSegmentIdeal("spanning_tree: no hilb-segment ideal for this order");

    SpanningTree tree;
    tree.root = root;
    tree.order = "matrix:" + M.fingerprint();
    for (const auto& J : ideals) {
        if (J.id == root) continue;
        StronglyStableIdeal parent = dominating_adjacent(J, ideals[root], M);
        int pid = -1;
        for (const auto& K : ideals)
            if (K.members == parent.members) {
                pid = K.id;
                break;
            }
        if (pid < 0)
            throw Error("spanning_tree: parent not in the enumeration");
        tree.parent[J.id] = pid;
    }
    return tree;
}

Cone maximality_cone(const StronglyStableIdeal& J, const BorelGraph& g)
{
    const int nvars = J.ctx->n + 1;
    Cone c;
    c.dim_ambient = nvars;
    c.strict = cone_w_rows(nvars);
    for (const auto& e : g.edges) {
        if (e.i != J.id && e.j != J.id) continue;
        const Monomial& mine = e.i == J.id ? e.label.a : e.label.a_prime;
        const Monomial& theirs = e.i == J.id ? e.label.a_prime : e.label.a;
        NormalRow v(nvars);
        for (int i = 0; i < nvars; ++i) v[i] = mine.exps[i] - theirs.exps[i];
        c.strict.push_back(primitive_vector(v));
    }
    return c;
}

Cone segment_cone(const StronglyStableIdeal& J)
{
    const int nvars = J.ctx->n + 1;
    Cone c;
    c.dim_ambient = nvars;
    c.strict = cone_w_rows(nvars);
    BorelExtremes ext = borel_extremes(J);
    std::set<NormalRow> rows;
    for (int a : ext.min_members)
        for (int b : ext.max_complement) {
            NormalRow v(nvars);
            for (int i = 0; i < nvars; ++i)
                v[i] = J.ctx->monomials[a].exps[i] - J.ctx->monomials[b].exps[i];
            rows.insert(primitive_vector(v));
        }
    for (const auto& v : rows) c.strict.push_back(v);
    return c;
}

bool is_irregular(const StronglyStableIdeal& J, const BorelGraph& g)
{
    Cone mc = maximality_cone(J, g);
    auto witness = strict_feasible(mc);
    if (!witness) return false; // empty M-cone: regular
    Cone sc = segment_cone(J);
    const std::size_t w_rows = static_cast<std::size_t>(mc.dim_ambient);

    // The M-cone witness may already violate a segment row.
    for (std::size_t k = w_rows; k < sc.strict.size(); ++k) {
        ZZ s = 0;
        for (std::size_t i = 0; i < sc.strict[k].size(); ++i)
            s += ZZ(sc.strict[k][i]) * (*witness)[i];
        if (s <= 0) return true;
    }
    // Otherwise some weight in MC(J) must violate a segment row.
    for (std::size_t k = w_rows; k < sc.strict.size(); ++k) {
        Cone probe = mc;
        NormalRow neg = sc.strict[k];
        for (long long& x : neg) x = -x;
        probe.nonstrict.push_back(std::move(neg)); // <row, w> <= 0
        if (strict_feasible(probe)) return true;
    }
    return false;
}

std::vector<SectionGroup> hyperplane_section_groups(const std::vector<StronglyStableIdeal>& ideals)
{
    std::map<SaturatedGenerators, std::vector<int>> groups;
    for (const auto& J : ideals)
        groups[hyperplane_section(J)].push_back(J.id);
    std::vector<SectionGroup> out;
    for (auto& [section, ids] : groups) {
        SectionGroup grp;
        grp.section = section;
        grp.ideal_ids = ids;
        out.push_back(std::move(grp));
    }
    std::sort(out.begin(), out.end(), [](const SectionGroup& a, const SectionGroup& b) {
        if (a.ideal_ids.size() != b.ideal_ids.size())
            return a.ideal_ids.size() > b.ideal_ids.size();
        return a.section < b.section;
    });
    return out;
}

std::vector<IntersectionSet> irregular_intersection_search(
    const std::vector<StronglyStableIdeal>& ideals, const BorelGraph& g)
{
    // Candidates: irregular ideals, grouped by hyperplane section; two
    // irregular ideals with the same section never share maximality weights.
    std::vector<char> irregular(ideals.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(omp_get_max_threads())
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ideals.size()); ++i)
        irregular[i] = is_irregular(ideals[i], g) ? 1 : 0;

    std::vector<SectionGroup> groups = hyperplane_section_groups(ideals);
    std::vector<std::vector<int>> irregular_by_group;
    std::map<int, Cone> mcones;
    for (const auto& grp : groups) {
        std::vector<int> irr;
        for (int id : grp.ideal_ids)
            if (irregular[id]) {
                irr.push_back(id);
                mcones.emplace(id, maximality_cone(ideals[id], g));
            }
        if (!irr.empty()) irregular_by_group.push_back(std::move(irr));
    }

    std::vector<IntersectionSet> found;
    std::vector<int> current;

    const int nvars = ideals.empty() ? 0 : ideals[0].ctx->n + 1;
    auto joint_feasible = [&](const std::vector<int>& ids) -> std::optional<std::vector<ZZ>> {
        if (ids.empty()) return std::nullopt;
        Cone joint = mcones.at(ids[0]);
        for (std::size_t k = 1; k < ids.size(); ++k) {
            const Cone& c = mcones.at(ids[k]);
            // W rows are shared; append only the edge rows.
            for (std::size_t t = cone_w_rows(joint.dim_ambient).size(); t < c.strict.size(); ++t)
                joint.strict.push_back(c.strict[t]);
        }
        return strict_feasible(joint);
    };
    auto satisfies_mc = [&](int id, const std::vector<ZZ>& w) {
        const Cone& c = mcones.at(id);
        for (std::size_t t = static_cast<std::size_t>(nvars); t < c.strict.size(); ++t) {
            ZZ s = 0;
            for (int i = 0; i < nvars; ++i) s += ZZ(c.strict[t][i]) * w[i];
            if (s <= 0) return false;
        }
        return true;
    };

    // DFS over groups, at most one ideal per group. The inherited witness
    // certifies most extensions without an LP solve.
    auto rec = [&](auto&& self, std::size_t group, const std::vector<ZZ>& witness) -> void {
        if (group == irregular_by_group.size()) {
            if (current.empty()) return;
            IntersectionSet s;
            s.ideal_ids = current;
            std::sort(s.ideal_ids.begin(), s.ideal_ids.end());
            s.witness = witness;
            found.push_back(std::move(s));
            return;
        }
        for (int id : irregular_by_group[group]) {
            current.push_back(id);
            if (satisfies_mc(id, witness)) {
                self(self, group + 1, witness);
            } else if (auto w2 = joint_feasible(current)) {
                self(self, group + 1, *w2);
            }
            current.pop_back();
        }
        self(self, group + 1, witness); // skip this group
    };
    std::vector<ZZ> start(nvars);
    for (int i = 0; i < nvars; ++i) start[i] = i + 1;
    rec(rec, 0, start);

    // Keep inclusion-maximal sets only.
    std::vector<IntersectionSet> maximal;
    for (const auto& s : found) {
        bool dominated = false;
        for (const auto& t : found) {
            if (t.ideal_ids.size() <= s.ideal_ids.size()) continue;
            if (std::includes(t.ideal_ids.begin(), t.ideal_ids.end(), s.ideal_ids.begin(),
                              s.ideal_ids.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end(), [](const IntersectionSet& a, const IntersectionSet& b) {
        if (a.ideal_ids.size() != b.ideal_ids.size())
            return a.ideal_ids.size() > b.ideal_ids.size();
        return a.ideal_ids < b.ideal_ids;
    });
    maximal.erase(std::unique(maximal.begin(), maximal.end(),
                              [](const IntersectionSet& a, const IntersectionSet& b) {
                                  return a.ideal_ids == b.ideal_ids;
                              }),
                  maximal.end());
    return maximal;
}

namespace {

// Descends from a point of W into a full-dimensional cell of the edge-normal
// arrangement whose closure contains it: normals that tie at the point are
// resolved one at a time by strict feasibility.
std::vector<ZZ> full_cell_point(const BorelGraph& g, const std::vector<ZZ>& w)
{
    const int nvars = static_cast<int>(w.size());
    std::set<NormalRow> unique;
    for (const auto& e : g.edges) {
        NormalRow v(nvars);
        for (int i = 0; i < nvars; ++i)
            v[i] = e.label.a.exps[i] - e.label.a_prime.exps[i];
        unique.insert(primitive_vector(v));
    }
    Cone cell;
    cell.dim_ambient = nvars;
    cell.strict = cone_w_rows(nvars);
    std::vector<NormalRow> deferred;
    for (const auto& v : unique) {
        ZZ s = 0;
        for (int i = 0; i < nvars; ++i) s += ZZ(v[i]) * w[i];
        if (s > 0) {
            cell.strict.push_back(v);
        } else if (s < 0) {
            NormalRow neg = v;
            for (long long& x : neg) x = -x;
            cell.strict.push_back(std::move(neg));
        } else {
            deferred.push_back(v);
        }
    }
    std::vector<ZZ> point = w;
    for (const auto& v : deferred) {
        cell.strict.push_back(v);
        auto p = strict_feasible(cell);
        if (!p) {
            for (long long& x : cell.strict.back()) x = -x;
            p = strict_feasible(cell);
            if (!p) throw Error("full_cell_point: both sides of a tie infeasible");
        }
        point = std::move(*p);
    }
    return point;
}

} // namespace

WeightCertificate certify_weight(const std::vector<StronglyStableIdeal>& ideals,
                                 const BorelGraph& g, const std::vector<ZZ>& w,
                                 const TermOrderMatrix& tiebreak)
{
    std::vector<ZZ> interior = full_cell_point(g, w);
    std::vector<QQ> wq(interior.size());
    for (std::size_t i = 0; i < interior.size(); ++i) wq[i] = QQ(interior[i]);
    WeightVector weight{std::vector<QQ>(wq)};
    DegenerationGraph dg = orient(g, weight);
    WeightCertificate cert;
    cert.sources = sources(dg);

    TermOrderMatrix M = term_order_from_weight(weight, tiebreak);
    TermOrderRanking ranking(ideals[0].ctx, M);
    for (int s : cert.sources)
        if (ranking.is_maximal_among(ideals[s], ideals)) cert.double_maxima.push_back(s);
    return cert;
}

ComponentBoundReport component_lower_bound(const std::vector<StronglyStableIdeal>& ideals,
                                           const BorelGraph& g, const GFan& f,
                                           const std::vector<TermOrderMatrix>& tiebreaks,
                                           int jobs)
{
    ComponentBoundReport report;
    report.cones.resize(f.cones.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t ci = 0; ci < static_cast<std::ptrdiff_t>(f.cones.size()); ++ci) {
        const MaximalCone& mc = f.cones[ci];
        ConeRecord rec;
        rec.cone = static_cast<int>(ci);
        rec.interior = mc.interior;

        // Orientation inside the cone comes from the sign vector; the
        // interior point reproduces it by construction.
        std::vector<int> indeg(ideals.size(), 0);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            EdgeState st = f.edge_state_in_cone(e, mc);
            ++indeg[st == EdgeState::Forward ? g.edges[e].j : g.edges[e].i];
        }
        for (std::size_t v = 0; v < ideals.size(); ++v)
            if (indeg[v] == 0) rec.sources.push_back(static_cast<int>(v));
        rec.source_count = static_cast<int>(rec.sources.size());

        std::vector<QQ> wq(mc.interior.size());
        for (std::size_t i = 0; i < mc.interior.size(); ++i) wq[i] = QQ(mc.interior[i]);
        WeightVector weight{std::vector<QQ>(wq)};
        for (const auto& tb : tiebreaks) {
            TermOrderMatrix M = term_order_from_weight(weight, tb);
            TermOrderRanking ranking(ideals[0].ctx, M);
            std::vector<int> maxima;
            for (int s : rec.sources)
                if (ranking.is_maximal_among(ideals[s], ideals)) maxima.push_back(s);
            if (static_cast<int>(maxima.size()) > rec.double_max_count) {
                rec.double_max_count = static_cast<int>(maxima.size());
                rec.double_maxima = std::move(maxima);
                rec.tiebreak = tb.fingerprint();
            }
            if (rec.double_max_count == rec.source_count) break;
        }
        report.cones[ci] = std::move(rec);
    }

    for (const auto& rec : report.cones) {
        if (rec.source_count > report.m_sources) report.m_sources = rec.source_count;
        if (rec.double_max_count > report.m_certified) {
            report.m_certified = rec.double_max_count;
            report.witness_ideals = rec.double_maxima;
        }
        if (rec.double_max_count < rec.source_count) report.conjecture_gap.push_back(rec.cone);
    }
    return report;
}

} // namespace hgf

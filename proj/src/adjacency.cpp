#include "hgf/adjacency.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <omp.h>
#include <set>

#include "hgf/errors.hpp"

namespace hgf {

EdgeLabel EdgeLabel::swapped() const
{
    EdgeLabel out;
    out.a = a_prime;
    out.a_prime = a;
    out.offsets = offsets;
    out.size = size;
    return out;
}

namespace {

// Borel maximum of a set of ranks, or -1 when there is no maximum.
int borel_maximum(const DegreeContext& ctx, const std::vector<int>& ranks)
{
    if (ranks.empty()) return -1;
    int cand = ranks[0];
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        BorelRel rel = borel_compare(ctx.monomials[ranks[k]], ctx.monomials[cand]);
        if (rel == BorelRel::Greater) cand = ranks[k];
    }
    for (int r : ranks) {
        if (r == cand) continue;
        if (borel_compare(ctx.monomials[cand], ctx.monomials[r]) != BorelRel::Greater)
            return -1;
    }
    return cand;
}

std::vector<int> set_difference_ranks(const MonomialSet& a, const MonomialSet& b)
{
    MonomialSet d = a - b;
    std::vector<int> out;
    out.reserve(d.count());
    for (std::size_t i = d.find_first(); i != MonomialSet::npos; i = d.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> exps_diff(const std::vector<int>& x, const std::vector<int>& y)
{
    std::vector<int> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
    return d;
}

} // namespace

AdjacencyResult borel_adjacent_diag(const StronglyStableIdeal& J, const StronglyStableIdeal& Jp)
{
    if (J.ctx->n != Jp.ctx->n || J.ctx->r != Jp.ctx->r || J.size() != Jp.size())
        throw ContextMismatch("borel_adjacent: ideals from different contexts");
    if (J.members == Jp.members)
        throw ContextMismatch("borel_adjacent: identical ideals");

    const DegreeContext& ctx = *J.ctx;
    std::vector<int> d1 = set_difference_ranks(J.members, Jp.members);
    std::vector<int> d2 = set_difference_ranks(Jp.members, J.members);

    AdjacencyResult res;
    int m1 = borel_maximum(ctx, d1);
    if (m1 < 0) { res.failure = AdjacencyFailure::NoMaxLeft; return res; }
    int m2 = borel_maximum(ctx, d2);
    if (m2 < 0) { res.failure = AdjacencyFailure::NoMaxRight; return res; }

    const auto& a = ctx.monomials[m1].exps;
    const auto& ap = ctx.monomials[m2].exps;
    std::set<std::vector<int>> off1, off2;
    for (int r : d1) off1.insert(exps_diff(ctx.monomials[r].exps, a));
    for (int r : d2) off2.insert(exps_diff(ctx.monomials[r].exps, ap));
    if (off1 != off2) { res.failure = AdjacencyFailure::OffsetMismatch; return res; }

    EdgeLabel label;
    label.a = ctx.monomials[m1];
    label.a_prime = ctx.monomials[m2];
    for (const auto& d : off1) {
        Offset o(d);
        // Maximality makes every displacement decreasing; guard regardless.
        if (!offset_is_decreasing(o))
            throw Error("borel_adjacent: non-decreasing offset from a Borel maximum");
        label.offsets.push_back(std::move(o));
    }
    std::sort(label.offsets.begin(), label.offsets.end());
    label.size = label.offsets.size();
    res.label = std::move(label);
    return res;
}

std::optional<EdgeLabel> borel_adjacent(const StronglyStableIdeal& J,
                                        const StronglyStableIdeal& Jp)
{
    return borel_adjacent_diag(J, Jp).label;
}

const BorelEdge* BorelGraph::find_edge(int i, int j) const
{
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j),
                               [](const BorelEdge& e, const std::pair<int, int>& key) {
                                   return std::make_pair(e.i, e.j) < key;
                               });
    if (it != edges.end() && it->i == i && it->j == j) return &*it;
    return nullptr;
}

std::vector<std::vector<int>> BorelGraph::adjacency_lists() const
{
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    return adj;
}

namespace {

BorelGraph assemble_graph(std::vector<StronglyStableIdeal> ideals,
                          std::vector<std::optional<EdgeLabel>> labels)
{
    const int V = static_cast<int>(ideals.size());
    BorelGraph g;
    g.vertices = std::move(ideals);
    std::size_t k = 0;
    for (int i = 0; i < V; ++i) {
        for (int j = i + 1; j < V; ++j, ++k) {
            if (labels[k]) {
                BorelEdge e;
                e.i = i;
                e.j = j;
                e.label = std::move(*labels[k]);
                g.edges.push_back(std::move(e));
            }
        }
    }
    return g;
}

} // namespace

BorelGraph borel_graph_serial(std::vector<StronglyStableIdeal> ideals)
{
    const int V = static_cast<int>(ideals.size());
    std::vector<std::optional<EdgeLabel>> labels;
    labels.reserve(static_cast<std::size_t>(V) * (V - 1) / 2);
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            labels.push_back(borel_adjacent(ideals[i], ideals[j]));
    return assemble_graph(std::move(ideals), std::move(labels));
}

BorelGraph borel_graph(std::vector<StronglyStableIdeal> ideals, int jobs)
{
    const int V = static_cast<int>(ideals.size());
    const std::size_t P = static_cast<std::size_t>(V) * (V - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(P);
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j) pairs.emplace_back(i, j);

    std::vector<std::optional<EdgeLabel>> labels(P);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(P); ++k)
        labels[k] = borel_adjacent(ideals[pairs[k].first], ideals[pairs[k].second]);
    return assemble_graph(std::move(ideals), std::move(labels));
}

std::vector<DeformationGenerator> deformation_generators(const StronglyStableIdeal& J,
                                                         const StronglyStableIdeal& Jp,
                                                         const EdgeLabel& label)
{
    const DegreeContext& ctx = *J.ctx;
    std::vector<int> d1 = set_difference_ranks(J.members, Jp.members);
    std::vector<int> d2 = set_difference_ranks(Jp.members, J.members);

    // The label must reproduce the two difference sets exactly.
    auto check_side = [&](const Monomial& maxm, const std::vector<int>& diff) {
        std::set<int> expect(diff.begin(), diff.end());
        std::set<int> got;
        for (const auto& o : label.offsets) {
            std::vector<int> e = maxm.exps;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.delta[i];
            int idx = ctx.index_of(e);
            if (idx < 0) return false;
            got.insert(idx);
        }
        return got == expect;
    };
    if (!check_side(label.a, d1) || !check_side(label.a_prime, d2))
        throw LabelMismatch("deformation_generators: label inconsistent with the pair");

    std::vector<DeformationGenerator> out;
    MonomialSet inter = J.members & Jp.members;
    for (std::size_t i = inter.find_first(); i != MonomialSet::npos; i = inter.find_next(i)) {
        DeformationGenerator g;
        g.head = ctx.monomials[i];
        out.push_back(std::move(g));
    }
    for (const auto& o : label.offsets) {
        DeformationGenerator g;
        g.pencil = true;
        std::vector<int> h = label.a.exps, t = label.a_prime.exps;
        for (std::size_t i = 0; i < h.size(); ++i) {
            h[i] += o.delta[i];
            t[i] += o.delta[i];
        }
        g.head = Monomial(std::move(h));
        g.tail = Monomial(std::move(t));
        out.push_back(std::move(g));
    }
    return out;
}

std::string SyzygyReport::message() const
{
    if (lifts) return "all " + std::to_string(checked) + " syzygies lift";
    std::string s = "syzygy x" + std::to_string(var_i) + "*" + format_monomial(head) +
                    " - x" + std::to_string(head.min_var()) + "*(...) does not lift";
    if (residual) s += "; residual T*" + format_monomial(*residual);
    return s;
}

SyzygyReport verify_syzygy_lifting(
    const StronglyStableIdeal& J, const StronglyStableIdeal& Jp,
    const std::optional<std::vector<std::pair<Monomial, Monomial>>>& pairing)
{
    const DegreeContext& ctx = *J.ctx;
    std::vector<int> d1 = set_difference_ranks(J.members, Jp.members);
    std::vector<int> d2 = set_difference_ranks(Jp.members, J.members);

    // head rank -> tail exponents
    std::map<int, std::vector<int>> tail_of;
    if (pairing) {
        std::set<int> heads_seen, tails_seen;
        for (const auto& [h, t] : *pairing) {
            int hi = ctx.index_of(h), ti = ctx.index_of(t);
            if (hi < 0 || !J.members.test(hi) || Jp.members.test(hi) ||
                ti < 0 || !Jp.members.test(ti) || J.members.test(ti))
                throw NotAPairing("pairing must map J\\J' onto J'\\J");
            tail_of[hi] = t.exps;
            heads_seen.insert(hi);
            tails_seen.insert(ti);
        }
        if (heads_seen.size() != d1.size() || tails_seen.size() != d2.size())
            throw NotAPairing("pairing must be a bijection between the difference sets");
    } else {
        auto res = borel_adjacent_diag(J, Jp);
        if (!res.label)
            throw NotAPairing("pair is not Borel adjacent; supply an explicit pairing");
        for (const auto& o : res.label->offsets) {
            std::vector<int> h = res.label->a.exps, t = res.label->a_prime.exps;
            for (std::size_t i = 0; i < h.size(); ++i) {
                h[i] += o.delta[i];
                t[i] += o.delta[i];
            }
            tail_of[ctx.index_of(h)] = std::move(t);
        }
    }

    SyzygyReport rep;
    const int n = ctx.n;
    for (const auto& [head_rank, tail] : tail_of) {
        const Monomial& b = ctx.monomials[head_rank];
        const int h = b.min_var();
        for (int i = h + 1; i <= n; ++i) {
            // Eliahou-Kervaire syzygy x_i * x^b - x_h * x^c, c = b + e_i - e_h.
            ++rep.checked;
            std::vector<int> c = b.exps;
            --c[h];
            ++c[i];
            int c_rank = ctx.index_of(c);
            // x^c >_B x^b, so it is a member of J.
            auto fail = [&](std::optional<Monomial> residual) {
                rep.lifts = false;
                rep.head = b;
                rep.var_i = i;
                rep.residual = std::move(residual);
            };
            std::vector<int> xitb = tail; // x_i * tail(b), degree r+1
            ++xitb[i];
            if (auto it = tail_of.find(c_rank); it != tail_of.end()) {
                // Case 1: x^c is a head; tails must satisfy the same relation:
                // x_i * tail(b) == x_h * tail(c).
                std::vector<int> xhtc = it->second;
                ++xhtc[h];
                if (xitb != xhtc) {
                    fail(Monomial(xitb));
                    return rep;
                }
            } else {
                // Case 2: x^c lies in the intersection; (x_i/x_h) tail(b) must
                // be a standard monomial inside the intersection.
                if (tail[h] == 0) {
                    fail(Monomial(xitb));
                    return rep;
                }
                std::vector<int> cp = tail;
                --cp[h];
                ++cp[i];
                int cp_rank = ctx.index_of(cp);
                if (cp_rank < 0 || !J.members.test(cp_rank) || !Jp.members.test(cp_rank)) {
                    fail(Monomial(xitb));
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::vector<int> graph_distances(const BorelGraph& g, int from)
{
    std::vector<int> dist(g.vertices.size(), -1);
    auto adj = g.adjacency_lists();
    std::deque<int> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool graph_connected(const BorelGraph& g)
{
    if (g.vertices.empty()) return true;
    auto dist = graph_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

} // namespace hgf

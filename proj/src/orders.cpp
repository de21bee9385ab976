#include "hgf/orders.hpp"

#include <algorithm>
#include <numeric>

#include "hgf/errors.hpp"

namespace hgf {

bool DegenerationGraph::fully_directed() const
{
    return std::none_of(states.begin(), states.end(),
                        [](EdgeState s) { return s == EdgeState::Undirected; });
}

std::pair<int, int> DegenerationGraph::directed_pair(std::size_t k) const
{
    const BorelEdge& e = base->edges[k];
    if (states[k] == EdgeState::Forward) return {e.i, e.j};
    if (states[k] == EdgeState::Backward) return {e.j, e.i};
    throw MixedGraph("edge is undirected");
}

namespace {

template <typename Compare>
DegenerationGraph orient_impl(const BorelGraph& g, Compare&& cmp, std::string descriptor)
{
    DegenerationGraph dg;
    dg.base = &g;
    dg.comparator = std::move(descriptor);
    dg.states.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        Cmp c = cmp(e.label.a, e.label.a_prime);
        dg.states.push_back(c == Cmp::Greater ? EdgeState::Forward
                            : c == Cmp::Less  ? EdgeState::Backward
                                              : EdgeState::Undirected);
    }
    return dg;
}

} // namespace

DegenerationGraph orient(const BorelGraph& g, const TermOrderMatrix& M)
{
    return orient_impl(
        g, [&](const Monomial& a, const Monomial& b) { return term_order_compare(M, a, b); },
        "matrix:" + M.fingerprint());
}

DegenerationGraph orient(const BorelGraph& g, const WeightVector& w)
{
    std::string desc = "weight:";
    for (std::size_t i = 0; i < w.w.size(); ++i) {
        if (i) desc += ',';
        desc += to_string(w.w[i]);
    }
    return orient_impl(
        g, [&](const Monomial& a, const Monomial& b) { return weight_compare(w, a, b); }, desc);
}

std::vector<int> sources(const DegenerationGraph& dg)
{
    std::vector<int> indeg(dg.base->vertices.size(), 0);
    for (std::size_t k = 0; k < dg.states.size(); ++k) {
        if (dg.states[k] == EdgeState::Undirected)
            throw MixedGraph("sources: the degeneration graph has undirected edges");
        ++indeg[dg.directed_pair(k).second];
    }
    std::vector<int> out;
    for (std::size_t v = 0; v < indeg.size(); ++v)
        if (indeg[v] == 0) out.push_back(static_cast<int>(v));
    return out;
}

bool is_acyclic(const DegenerationGraph& dg)
{
    const std::size_t V = dg.base->vertices.size();
    std::vector<std::vector<int>> succ(V);
    std::vector<int> indeg(V, 0);
    for (std::size_t k = 0; k < dg.states.size(); ++k) {
        if (dg.states[k] == EdgeState::Undirected) continue;
        auto [u, v] = dg.directed_pair(k);
        succ[u].push_back(v);
        ++indeg[v];
    }
    std::vector<int> order;
    for (std::size_t v = 0; v < V; ++v)
        if (indeg[v] == 0) order.push_back(static_cast<int>(v));
    std::size_t head = 0;
    while (head < order.size()) {
        int u = order[head++];
        for (int v : succ[u])
            if (--indeg[v] == 0) order.push_back(v);
    }
    return order.size() == V;
}

TermOrderRanking::TermOrderRanking(std::shared_ptr<const DegreeContext> ctx,
                                   const TermOrderMatrix& M)
    : ctx_(std::move(ctx))
{
    const int N = static_cast<int>(ctx_->size());
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return term_order_compare(M, ctx_->monomials[a], ctx_->monomials[b]) == Cmp::Greater;
    });
    rank_.resize(N);
    for (int pos = 0; pos < N; ++pos) rank_[perm[pos]] = pos;
}

const std::vector<int>& TermOrderRanking::sorted_ranks(const StronglyStableIdeal& J) const
{
    if (J.id >= 0) {
        if (cache_.size() <= static_cast<std::size_t>(J.id))
            cache_.resize(J.id + 1);
        if (!cache_[J.id].empty()) return cache_[J.id];
    }
    std::vector<int> ranks;
    ranks.reserve(J.size());
    for (std::size_t i = J.members.find_first(); i != MonomialSet::npos;
         i = J.members.find_next(i))
        ranks.push_back(rank_[i]);
    std::sort(ranks.begin(), ranks.end());
    if (J.id >= 0) {
        cache_[J.id] = std::move(ranks);
        return cache_[J.id];
    }
    static thread_local std::vector<int> scratch;
    scratch = std::move(ranks);
    return scratch;
}

DoubleOrderRel TermOrderRanking::compare(const StronglyStableIdeal& J,
                                         const StronglyStableIdeal& Jp) const
{
    if (J.ctx->n != Jp.ctx->n || J.ctx->r != Jp.ctx->r || J.size() != Jp.size())
        throw ContextMismatch("double order: ideals from different contexts");
    const auto a = sorted_ranks(J);  // copies: cache may be invalidated below
    const auto b = sorted_ranks(Jp);
    bool above = true, below = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) above = false; // larger rank = smaller monomial
        if (a[i] < b[i]) below = false;
    }
    if (above && below) return DoubleOrderRel::Equal;
    if (above) return DoubleOrderRel::JAbove;
    if (below) return DoubleOrderRel::JPrimeAbove;
    return DoubleOrderRel::Incomparable;
}

bool TermOrderRanking::is_maximal_among(const StronglyStableIdeal& J,
                                        const std::vector<StronglyStableIdeal>& all) const
{
    for (const auto& other : all) {
        if (other.members == J.members) continue;
        if (compare(other, J) == DoubleOrderRel::JAbove) return false;
    }
    return true;
}

std::vector<int> TermOrderRanking::maxima(const std::vector<StronglyStableIdeal>& ideals) const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        if (is_maximal_among(ideals[i], ideals)) out.push_back(static_cast<int>(i));
    return out;
}

DoubleOrderRel double_order_compare(const StronglyStableIdeal& J, const StronglyStableIdeal& Jp,
                                    const TermOrderMatrix& M)
{
    TermOrderRanking ranking(J.ctx, M);
    return ranking.compare(J, Jp);
}

std::vector<int> double_order_maxima(const std::vector<StronglyStableIdeal>& ideals,
                                     const TermOrderMatrix& M)
{
    if (ideals.empty()) return {};
    TermOrderRanking ranking(ideals[0].ctx, M);
    return ranking.maxima(ideals);
}

WeightFromOrder weight_from_term_order(const TermOrderMatrix& M, const DegenerationGraph& dg)
{
    const int nv = M.nvars();
    const auto& rows = M.rows;

    // Directed edge normals v = winner - loser; every <v, .> must end up > 0.
    std::vector<std::vector<int>> normals;
    for (std::size_t k = 0; k < dg.states.size(); ++k) {
        if (dg.states[k] == EdgeState::Undirected)
            throw MixedGraph("weight_from_term_order: graph not fully directed");
        const EdgeLabel& lbl = dg.base->edges[k].label;
        const Monomial& win = dg.states[k] == EdgeState::Forward ? lbl.a : lbl.a_prime;
        const Monomial& lose = dg.states[k] == EdgeState::Forward ? lbl.a_prime : lbl.a;
        std::vector<int> v(nv);
        for (int i = 0; i < nv; ++i) v[i] = win.exps[i] - lose.exps[i];
        normals.push_back(std::move(v));
    }

    auto dot = [&](const std::vector<QQ>& row, const std::vector<int>& v) {
        QQ s = 0;
        for (int i = 0; i < nv; ++i) s += row[i] * v[i];
        return s;
    };

    // E_i: edges whose normal first meets a nonzero (necessarily positive)
    // inner product at row i. X_i: variables x_k whose relation x_k > x_{k-1}
    // is decided at row i.
    std::vector<std::vector<int>> E(nv), X(nv);
    for (std::size_t e = 0; e < normals.size(); ++e) {
        for (int i = 0; i < nv; ++i) {
            QQ s = dot(rows[i], normals[e]);
            if (s == 0) continue;
            if (s < 0) throw Error("weight_from_term_order: matrix does not direct this edge");
            E[i].push_back(static_cast<int>(e));
            break;
        }
    }
    for (int k = 1; k < nv; ++k) {
        for (int i = 0; i < nv; ++i) {
            QQ d = rows[i][k] - rows[i][k - 1];
            if (d == 0) continue;
            X[i].push_back(k);
            break;
        }
    }

    int s_top = -1;
    for (int i = 0; i < nv; ++i)
        if (!E[i].empty() || !X[i].empty()) s_top = i;

    std::vector<QQ> lambda(nv, QQ(0));
    if (s_top >= 0) {
        lambda[s_top] = 1;
        for (int i = s_top - 1; i >= 0; --i) {
            if (E[i].empty() && X[i].empty()) continue;
            QQ best = 0;
            bool have = false;
            for (int e : E[i]) {
                QQ denom = dot(rows[i], normals[e]);
                QQ rest = 0;
                for (int j = i + 1; j < nv; ++j)
                    rest += lambda[j] * dot(rows[j], normals[e]);
                QQ cand = -rest / denom;
                if (!have || cand > best) { best = cand; have = true; }
            }
            for (int k : X[i]) {
                QQ denom = rows[i][k] - rows[i][k - 1];
                QQ rest = 0;
                for (int j = i + 1; j < nv; ++j)
                    rest += lambda[j] * (rows[j][k] - rows[j][k - 1]);
                QQ cand = -rest / denom;
                if (!have || cand > best) { best = cand; have = true; }
            }
            lambda[i] = best + 1;
        }
    }

    WeightFromOrder out;
    out.raw.assign(nv, QQ(0));
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nv; ++i) out.raw[i] += lambda[j] * rows[j][i];

    std::vector<QQ> shifted = out.raw;
    if (shifted[0] <= 0) {
        QQ c = 1 - shifted[0];
        for (QQ& q : shifted) q += c;
    }
    out.shifted = WeightVector(std::move(shifted));
    return out;
}

} // namespace hgf

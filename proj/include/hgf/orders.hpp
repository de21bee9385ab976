#ifndef HGF_ORDERS_HPP
#define HGF_ORDERS_HPP

#include <string>
#include <vector>

#include "hgf/adjacency.hpp"
#include "hgf/term_order.hpp"

namespace hgf {

enum class EdgeState { Forward, Backward, Undirected }; // forward = i -> j

/// The Borel graph with every edge compared under a term order or a weight
/// vector. Term orders always direct every edge; weights may leave ties.
struct DegenerationGraph {
    const BorelGraph* base = nullptr;
    std::vector<EdgeState> states; // parallel to base->edges
    std::string comparator;        // provenance, for output only

    bool fully_directed() const;
    /// Winner/loser vertex ids of edge k (edge must be directed).
    std::pair<int, int> directed_pair(std::size_t k) const;
};

DegenerationGraph orient(const BorelGraph& g, const TermOrderMatrix& M);
DegenerationGraph orient(const BorelGraph& g, const WeightVector& w);

/// Vertices of in-degree 0 (the maxima of the degeneration order). Throws
/// MixedGraph when some edge is undirected.
std::vector<int> sources(const DegenerationGraph& dg);

bool is_acyclic(const DegenerationGraph& dg);

enum class DoubleOrderRel { JAbove, JPrimeAbove, Equal, Incomparable };

/// Ranks every monomial of a degree context under a term order once, then
/// compares ideals by the sorted elementwise criterion. Per-ideal sorted rank
/// sequences are cached.
class TermOrderRanking {
public:
    TermOrderRanking(std::shared_ptr<const DegreeContext> ctx, const TermOrderMatrix& M);

    /// rank 0 = Omega-largest monomial of T^n_r.
    int rank_of(int ctx_rank) const { return rank_[ctx_rank]; }

    DoubleOrderRel compare(const StronglyStableIdeal& J, const StronglyStableIdeal& Jp) const;

    /// Ideals not strictly below any other under the double order.
    std::vector<int> maxima(const std::vector<StronglyStableIdeal>& ideals) const;

    /// Restriction of maxima(): candidates checked against all ideals.
    bool is_maximal_among(const StronglyStableIdeal& J,
                          const std::vector<StronglyStableIdeal>& all) const;

private:
    const std::vector<int>& sorted_ranks(const StronglyStableIdeal& J) const;
    std::shared_ptr<const DegreeContext> ctx_;
    std::vector<int> rank_;
    mutable std::vector<std::vector<int>> cache_; // by ideal id
};

DoubleOrderRel double_order_compare(const StronglyStableIdeal& J,
                                    const StronglyStableIdeal& Jp,
                                    const TermOrderMatrix& M);

std::vector<int> double_order_maxima(const std::vector<StronglyStableIdeal>& ideals,
                                     const TermOrderMatrix& M);

/// The lambda-construction: a weight vector in the open cone of the term
/// order, reproducing every edge direction of dg and strictly increasing.
/// `raw` is the plain combination of matrix rows; `shifted` adds a multiple
/// of (1,...,1) to land in the positive cone W.
struct WeightFromOrder {
    std::vector<QQ> raw;
    WeightVector shifted;
};

WeightFromOrder weight_from_term_order(const TermOrderMatrix& M, const DegenerationGraph& dg);

} // namespace hgf

#endif

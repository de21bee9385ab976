#ifndef HGF_IDEAL_HPP
#define HGF_IDEAL_HPP

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <memory>
#include <vector>

#include "hgf/hilbert.hpp"
#include "hgf/monomial.hpp"
#include "hgf/term_order.hpp"

namespace hgf {

using MonomialSet = boost::dynamic_bitset<std::uint64_t>;

/// Indexed view of T^n_r: all monomials of degree r in n+1 variables, sorted
/// in decreasing DegLex order (rank 0 = largest). Move targets and levels are
/// precomputed; everything is immutable and shared between ideals.
struct DegreeContext {
    int n;
    long r;
    std::vector<Monomial> monomials; // by rank
    std::vector<int> min_var_of;     // level of each rank

    // up_moves[i]: ranks of admissible increasing-move images of rank i
    // (at most n of them); down_moves analogous for decreasing moves.
    std::vector<std::vector<int>> up_moves;
    std::vector<std::vector<int>> down_moves;

    std::size_t size() const { return monomials.size(); }
    int index_of(const Monomial& m) const;             // -1 if absent
    int index_of(const std::vector<int>& exps) const;  // -1 if absent

    static std::shared_ptr<const DegreeContext> make(int n, long r);

private:
    std::map<std::vector<int>, int> index_;
};

/// Strongly stable ideal, represented by its Borel set in degree r as a
/// bitset over the context ranks. `id` is the position in the canonical
/// enumeration order (see enumerate_ideals).
struct StronglyStableIdeal {
    std::shared_ptr<const DegreeContext> ctx;
    MonomialSet members;
    int id = -1;
    std::vector<long> level_counts;

    bool contains(int rank) const { return members.test(rank); }
    std::size_t size() const { return members.count(); }

    /// Member monomials in decreasing DegLex order.
    std::vector<Monomial> gens() const;

    bool operator==(const StronglyStableIdeal& o) const { return members == o.members; }
};

/// Minimal monomial generators of a saturated strongly stable ideal, possibly
/// of mixed degrees. `var_offset` shifts printed variable names: hyperplane
/// sections live in K[x1..xn] and carry var_offset = 1.
struct SaturatedGenerators {
    std::vector<Monomial> gens; // sorted by (degree, decreasing DegLex)
    int var_offset = 0;

    bool operator==(const SaturatedGenerators& o) const
    {
        return gens == o.gens && var_offset == o.var_offset;
    }
    bool operator<(const SaturatedGenerators& o) const;
    std::string str() const; // "(x3, x2^6)"
};

/// All Borel subsets of T^n_r with the level profile of p, i.e. the set
/// SI(p, n), in canonical order. The enumeration is a DFS over T^n_r in
/// decreasing DegLex order: a monomial may be selected only when all its
/// admissible increasing-move images are selected, and branches die when a
/// level count is exceeded or can no longer be completed. Ideal 0 is always
/// the lexicographic ideal.
std::vector<StronglyStableIdeal> enumerate_ideals(const HilbertPolynomial& p, int n);

/// Closure of an explicit equal-degree monomial set under admissible
/// increasing moves. Throws MixedDegrees on unequal degrees.
bool is_borel_set(const std::vector<Monomial>& monomials);

/// Minimal generators of J^sat: divide each member of the Borel set by its
/// full x0 power, deduplicate, drop non-minimal elements.
SaturatedGenerators saturate(const StronglyStableIdeal& J);

/// Saturation of J + (x0) in K[x1,...,xn]: reinterpret the min>=1 part in n
/// variables, divide out x1 powers, minimalize.
SaturatedGenerators hyperplane_section(const StronglyStableIdeal& J);

/// Expands saturated generators back to the degree-r monomials they generate
/// (the round-trip check for saturate()).
std::vector<Monomial> degree_piece(const SaturatedGenerators& sat, int nvars, long r);

struct BorelExtremes {
    std::vector<int> min_members;    // ranks, >=_B-minimal elements of J
    std::vector<int> max_complement; // ranks, >=_B-maximal elements of J^c
};

BorelExtremes borel_extremes(const StronglyStableIdeal& J);

/// True iff every member beats every non-member under the comparator
/// (checked on the extremal pairs; that is equivalent). The weight overload
/// throws AmbiguousUnderWeights when a deciding pair ties.
bool is_hilb_segment(const StronglyStableIdeal& J, const TermOrderMatrix& M);
bool is_hilb_segment(const StronglyStableIdeal& J, const WeightVector& w);

} // namespace hgf

#endif

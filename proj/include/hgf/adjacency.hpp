#ifndef HGF_ADJACENCY_HPP
#define HGF_ADJACENCY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hgf/ideal.hpp"

namespace hgf {

/// Label of a Borel-graph edge between J and J': the Borel maxima of the two
/// difference sets and the shared displacement set realizing them.
struct EdgeLabel {
    Monomial a;                  // Borel maximum of J \ J'
    Monomial a_prime;            // Borel maximum of J' \ J
    std::vector<Offset> offsets; // sorted; always contains the zero offset
    std::size_t size = 0;        // |J \ J'| = |J' \ J| = offsets.size()

    EdgeLabel swapped() const;
};

enum class AdjacencyFailure { None, NoMaxLeft, NoMaxRight, OffsetMismatch };

struct AdjacencyResult {
    std::optional<EdgeLabel> label;
    AdjacencyFailure failure = AdjacencyFailure::None;
};

/// Borel adjacency decision: both difference sets must have a Borel maximum
/// and must be parallel translates of their maxima by a common offset set.
/// Throws ContextMismatch on different (n, r) or J == J'.
std::optional<EdgeLabel> borel_adjacent(const StronglyStableIdeal& J,
                                        const StronglyStableIdeal& Jp);
AdjacencyResult borel_adjacent_diag(const StronglyStableIdeal& J,
                                    const StronglyStableIdeal& Jp);

struct BorelEdge {
    int i, j; // vertex ids, i < j
    EdgeLabel label; // stored from vertex i's perspective
};

struct BorelGraph {
    std::vector<StronglyStableIdeal> vertices;
    std::vector<BorelEdge> edges; // sorted by (i, j)

    const BorelEdge* find_edge(int i, int j) const;
    std::vector<std::vector<int>> adjacency_lists() const;
};

/// All-pairs adjacency. The parallel version distributes the pair tests over
/// OpenMP threads; both produce identical graphs.
BorelGraph borel_graph_serial(std::vector<StronglyStableIdeal> ideals);
BorelGraph borel_graph(std::vector<StronglyStableIdeal> ideals, int jobs = 0);

/// Generators of the Borel deformation family: the shared monomials plus one
/// pencil y0*E(x^a) + y1*E(x^a') per offset.
struct DeformationGenerator {
    bool pencil = false;
    Monomial head;                 // member of J (or of the intersection)
    std::optional<Monomial> tail;  // member of J' \ J when pencil
};

std::vector<DeformationGenerator> deformation_generators(const StronglyStableIdeal& J,
                                                         const StronglyStableIdeal& Jp,
                                                         const EdgeLabel& label);

/// Eliahou-Kervaire syzygy lifting check for the marked family with y0 = 1,
/// y1 = T. `pairing` overrides the offset pairing with an explicit
/// head <-> tail bijection (used to probe non-adjacent pairs).
struct SyzygyReport {
    bool lifts = true;
    std::size_t checked = 0;
    // On failure: the syzygy x_i * head - x_h * (x_i/x_h) head and the
    // residual degree-(r+1) monomial with coefficient T.
    Monomial head;
    int var_i = -1;
    std::optional<Monomial> residual;
    std::string message() const;
};

SyzygyReport verify_syzygy_lifting(
    const StronglyStableIdeal& J, const StronglyStableIdeal& Jp,
    const std::optional<std::vector<std::pair<Monomial, Monomial>>>& pairing = std::nullopt);

/// BFS distances from a vertex (plumbing for the punctual distance bound).
std::vector<int> graph_distances(const BorelGraph& g, int from);
bool graph_connected(const BorelGraph& g);

} // namespace hgf

#endif

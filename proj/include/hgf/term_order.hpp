#ifndef HGF_TERM_ORDER_HPP
#define HGF_TERM_ORDER_HPP

#include <string>
#include <vector>

#include "hgf/monomial.hpp"
#include "hgf/rational.hpp"

namespace hgf {

enum class Cmp { Greater, Less, Equal };

/// A weight vector; membership in the cone W (positive, strictly increasing)
/// is checked by the operations that need it, not at the type level.
struct WeightVector {
    std::vector<QQ> w;

    WeightVector() = default;
    explicit WeightVector(std::vector<QQ> v) : w(std::move(v)) {}
    int nvars() const { return static_cast<int>(w.size()); }
};

/// Full-rank rational matrix representing a graded-compatible term order with
/// x_0 < ... < x_n. Construction validates:
///  - full rank,
///  - the first row with a nonzero entry in M(e_k - e_{k-1}) is positive for
///    every k (the order refines the variable order),
///  - the first nonzero entry of each column is positive (1 < x_i).
struct TermOrderMatrix {
    std::vector<std::vector<QQ>> rows;

    int nvars() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

    static TermOrderMatrix from_rows(std::vector<std::vector<QQ>> rows);
    static TermOrderMatrix deglex(int nvars);
    static TermOrderMatrix revlex(int nvars);

    /// Stable identity for caching: the exact row entries, serialized.
    std::string fingerprint() const;
};

/// Lexicographic sign of M (a - b); Equal only when a = b.
Cmp term_order_compare(const TermOrderMatrix& M, const Monomial& a, const Monomial& b);

/// Sign of <a - b, w>.
Cmp weight_compare(const WeightVector& w, const Monomial& a, const Monomial& b);

/// Matrix with first row w (shifted by (1 - min w)(1,...,1) when min w <= 0)
/// followed by the rows of the tiebreak, reduced to an independent square
/// system and validated. Throws InvalidWeight when the result is not a valid
/// term order matrix.
TermOrderMatrix term_order_from_weight(const WeightVector& w, const TermOrderMatrix& tiebreak);

} // namespace hgf

#endif

#ifndef HGF_MONOMIAL_HPP
#define HGF_MONOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "hgf/errors.hpp"

namespace hgf {

/// A monomial in n+1 variables x0..xn, stored as a dense exponent vector.
/// Values are immutable after construction; all operations are pure.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e);

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const;

    /// Index of the smallest variable dividing the monomial; nvars() for 1.
    int min_var() const;
    int max_var() const;

    /// |a|_i = a_i + ... + a_n, the suffix-sum used by the Borel criterion.
    int suffix_sum(int i) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
    bool operator<(const Monomial& o) const { return exps < o.exps; }
};

enum class BorelRel { Greater, Less, Equal, Incomparable };

/// Suffix-sum criterion for the Borel partial order on equal-degree monomials:
/// a >=_B b iff |a|_i >= |b|_i for all i.
BorelRel borel_compare(const Monomial& a, const Monomial& b);

/// An elementary move: Increasing(i) multiplies by x_{i+1}/x_i (0 <= i < n),
/// Decreasing(j) multiplies by x_{j-1}/x_j (0 < j <= n).
struct Move {
    enum class Kind { Increasing, Decreasing };
    Kind kind;
    int index;

    static Move increasing(int i) { return {Kind::Increasing, i}; }
    static Move decreasing(int j) { return {Kind::Decreasing, j}; }
};

/// Applies the move when admissible (result has non-negative exponents),
/// returns nullopt otherwise.
std::optional<Monomial> apply_move(const Monomial& m, const Move& mv);

/// Net exponent displacement of a composition of elementary moves.
/// Components always sum to zero.
struct Offset {
    std::vector<int> delta;

    Offset() = default;
    explicit Offset(std::vector<int> d) : delta(std::move(d)) {}

    bool operator==(const Offset& o) const { return delta == o.delta; }
    bool operator<(const Offset& o) const { return delta < o.delta; }
};

/// True iff the offset is realizable by decreasing moves: all suffix sums
/// sum_{k>=i} delta_k <= 0 for i >= 1. Throws NonZeroSum when the components
/// do not sum to zero.
bool offset_is_decreasing(const Offset& o);

/// Canonical ASCII text form, zero exponents suppressed: "x0^2*x1", "1".
std::string format_monomial(const Monomial& m, int var_offset = 0);

/// Parses the canonical syntax only ("x0^2*x1"); rejects anything else with
/// a positioned ParseError.
Monomial parse_monomial(const std::string& text, int nvars);

} // namespace hgf

#endif

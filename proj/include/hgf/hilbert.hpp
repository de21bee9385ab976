#ifndef HGF_HILBERT_HPP
#define HGF_HILBERT_HPP

#include <string>
#include <vector>

#include "hgf/rational.hpp"

namespace hgf {

/// Univariate polynomial in t over the rationals, coefficients lowest degree
/// first, trailing coefficient nonzero unless the polynomial is zero.
struct UniPoly {
    std::vector<QQ> coeffs;

    UniPoly() = default;
    explicit UniPoly(std::vector<QQ> c) : coeffs(std::move(c)) { normalize(); }

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const QQ& leading() const { return coeffs.back(); }
    QQ eval(const QQ& t) const;

    bool operator==(const UniPoly& o) const { return coeffs == o.coeffs; }
    bool operator!=(const UniPoly& o) const { return coeffs != o.coeffs; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
};

UniPoly constant_poly(const QQ& c);

/// C(t + c, a) expanded as prod_{k=1..a} (t + c - a + k) / a! ; C(., 0) = 1
/// and a < 0 gives the zero polynomial.
UniPoly binomial_poly(long c, long a);

/// Exact binomial coefficient C(m, k) with C(m, k) = 0 for k < 0.
ZZ binomial(long m, long k);

/// Grammar: integer/rational coefficients, variable "t", operators + - *,
/// "^" powers. Examples: "6t-3", "3*t+1", "t^2", "1/2*t^2+1/2*t".
UniPoly parse_polynomial(const std::string& text);

std::string format_polynomial(const UniPoly& p);

/// i-fold finite difference: D p(t) = p(t) - p(t-1).
UniPoly finite_difference(const UniPoly& p, int i);

/// A Hilbert polynomial with its Gotzmann decomposition
/// p(t) = sum_i C(t + a_i - i + 1, a_i), a_1 >= ... >= a_r >= 0;
/// r is the Gotzmann number.
struct HilbertPolynomial {
    UniPoly poly;
    std::vector<long> gotzmann;
    long r() const { return static_cast<long>(gotzmann.size()); }
};

/// Greedy decomposition; throws NotHilbertPolynomial when the recursion fails
/// (degree increase, negative leading coefficient, or no termination within
/// the iteration guard).
HilbertPolynomial gotzmann_decomposition(const UniPoly& p);

/// q(t) = C(t+n, n) - p(t). Throws ImproperSubscheme when p(t) = C(t+n,n)
/// identically or q(r) < 0.
UniPoly volume_polynomial(const HilbertPolynomial& p, int n);

/// Cardinalities |J_i| of the per-minimal-variable levels of the Borel set in
/// degree r, derived from |J_{>=i}| = C(n+r-i, n-i) - D^i p(r).
struct LevelProfile {
    int n;
    long r;
    std::vector<long> counts; // counts[i] = |J_i|, i = 0..n
    long q_r;                 // = sum counts = C(n+r, n) - p(r)
};

LevelProfile level_profile(const HilbertPolynomial& p, int n);

} // namespace hgf

#endif

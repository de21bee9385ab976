#ifndef HGF_RATIONAL_HPP
#define HGF_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace hgf {

// All exact arithmetic in the library runs on GMP-backed types.
using QQ = boost::multiprecision::mpq_rational;
using ZZ = boost::multiprecision::mpz_int;

inline ZZ numerator(const QQ& q) { return boost::multiprecision::numerator(q); }
inline ZZ denominator(const QQ& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const QQ& q) { return denominator(q) == 1; }

inline int sign_of(const QQ& q) { return q.sign(); }
inline int sign_of(const ZZ& z) { return z.sign(); }

// Smallest integer vector with the same direction: clear denominators, divide
// by the gcd of the entries. The zero vector stays zero.
std::vector<ZZ> primitive_vector(const std::vector<QQ>& v);
std::vector<ZZ> primitive_vector(const std::vector<ZZ>& v);
std::vector<long long> primitive_vector(const std::vector<long long>& v);

std::string to_string(const QQ& q);
std::string to_string(const ZZ& z);
QQ parse_rational(const std::string& text);

} // namespace hgf

#endif

#include "hgf/rational.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <numeric>

#include "hgf/errors.hpp"

namespace hgf {

std::vector<ZZ> primitive_vector(const std::vector<QQ>& v)
{
    ZZ lcm_den = 1;
    for (const QQ& q : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
    std::vector<ZZ> out(v.size());
    ZZ g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (ZZ& z : out) z /= g;
    return out;
}

std::vector<ZZ> primitive_vector(const std::vector<ZZ>& v)
{
    ZZ g = 0;
    for (const ZZ& z : v) g = boost::multiprecision::gcd(g, z);
    std::vector<ZZ> out = v;
    if (g > 1)
        for (ZZ& z : out) z /= g;
    return out;
}

std::vector<long long> primitive_vector(const std::vector<long long>& v)
{
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    std::vector<long long> out = v;
    if (g > 1)
        for (long long& x : out) x /= g;
    return out;
}

std::string to_string(const QQ& q) { return q.str(); }
std::string to_string(const ZZ& z) { return z.str(); }

QQ parse_rational(const std::string& text)
{
    try {
        return QQ(text);
    } catch (const std::exception&) {
        throw ParseError("invalid rational '" + text + "'", 0);
    }
}

} // namespace hgf

#include "hgf/hilbert.hpp"

#include <cctype>

#include "hgf/errors.hpp"

namespace hgf {

void UniPoly::normalize()
{
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

QQ UniPoly::eval(const QQ& t) const
{
    QQ v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * t + *it;
    return v;
}

UniPoly UniPoly::operator+(const UniPoly& o) const
{
    std::vector<QQ> c(std::max(coeffs.size(), o.coeffs.size()), QQ(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) c[i] += o.coeffs[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const
{
    std::vector<QQ> c(std::max(coeffs.size(), o.coeffs.size()), QQ(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) c[i] -= o.coeffs[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const
{
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<QQ> c(coeffs.size() + o.coeffs.size() - 1, QQ(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j)
            c[i + j] += coeffs[i] * o.coeffs[j];
    return UniPoly(std::move(c));
}

UniPoly constant_poly(const QQ& c)
{
    return UniPoly(std::vector<QQ>{c});
}

ZZ binomial(long m, long k)
{
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (m >= 0 && m < k) return 0;
    ZZ num = 1, den = 1;
    for (long i = 1; i <= k; ++i) {
        num *= (m - k + i);
        den *= i;
    }
    return num / den;
}

UniPoly binomial_poly(long c, long a)
{
    if (a < 0) return UniPoly();
    UniPoly p = constant_poly(1);
    QQ fact = 1;
    for (long k = 1; k <= a; ++k) {
        p = p * UniPoly(std::vector<QQ>{QQ(c - a + k), QQ(1)});
        fact *= k;
    }
    std::vector<QQ> coeffs = p.coeffs;
    for (QQ& q : coeffs) q /= fact;
    return UniPoly(std::move(coeffs));
}

UniPoly parse_polynomial(const std::string& text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto read_uint = [&]() -> ZZ {
        std::size_t start = pos;
        ZZ v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw ParseError("expected a number", pos);
        return v;
    };

    UniPoly result;
    skip_ws();
    if (pos >= text.size()) throw ParseError("empty polynomial", pos);
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", pos);
        }

        QQ coeff = 1;
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ZZ num = read_uint();
            ZZ den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                den = read_uint();
                if (den == 0) throw ParseError("zero denominator", pos);
            }
            coeff = QQ(num, den);
            have_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        long power = 0;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            power = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                ZZ e = read_uint();
                if (e > 64) throw ParseError("power too large", pos);
                power = static_cast<long>(e);
            }
        } else if (!have_coeff) {
            throw ParseError("expected coefficient or 't'", pos);
        }

        std::vector<QQ> term(power + 1, QQ(0));
        term[power] = sign * coeff;
        result = result + UniPoly(std::move(term));
        first = false;
    }
    return result;
}

std::string format_polynomial(const UniPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const QQ& c = p.coeffs[d];
        if (c == 0) continue;
        QQ a = c;
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? "-" : "+";
            if (a < 0) a = -a;
        }
        if (d == 0 || a != 1) out += to_string(a);
        if (d >= 1) {
            if (a != 1) out += "*";
            out += "t";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

UniPoly finite_difference(const UniPoly& p, int i)
{
    UniPoly cur = p;
    for (int k = 0; k < i; ++k) {
        // p(t) - p(t-1) via binomial expansion of (t-1)^j.
        UniPoly shifted;
        for (int j = 0; j <= cur.degree(); ++j) {
            if (cur.coeffs[j] == 0) continue;
            std::vector<QQ> pow(j + 1, QQ(0));
            for (int l = 0; l <= j; ++l) {
                ZZ b = binomial(j, l);
                pow[l] = QQ(b) * ((j - l) % 2 == 0 ? 1 : -1);
            }
            UniPoly term{std::vector<QQ>(pow)};
            for (QQ& q : term.coeffs) q *= cur.coeffs[j];
            term.normalize();
            shifted = shifted + term;
        }
        cur = cur - shifted;
    }
    return cur;
}

HilbertPolynomial gotzmann_decomposition(const UniPoly& p)
{
    HilbertPolynomial hp;
    hp.poly = p;
    if (p.is_zero()) return hp; // r = 0; rejected downstream by enumerate

    // Iteration guard: desk-scale decompositions have r <= ~60; a bound tied
    // to p keeps non-Hilbert inputs from looping.
    long guard = 200;
    QQ p20 = p.eval(20);
    if (p20 > 0 && is_integer(p20)) {
        ZZ b = numerator(p20) * 4;
        if (b > guard && b < 1000000) guard = static_cast<long>(b);
        if (b >= 1000000) guard = 1000000;
    }

    UniPoly f = p;
    long i = 0;
    long prev_a = -1;
    while (!f.is_zero()) {
        ++i;
        if (i > guard)
            throw NotHilbertPolynomial("decomposition did not terminate within " +
                                       std::to_string(guard) + " steps");
        long a = f.degree();
        if (f.leading() <= 0)
            throw NotHilbertPolynomial("negative leading coefficient at step " + std::to_string(i));
        if (prev_a >= 0 && a > prev_a)
            throw NotHilbertPolynomial("increasing degree at step " + std::to_string(i));
        f = f - binomial_poly(a - i + 1, a);
        if (!f.is_zero() && f.degree() > a)
            throw NotHilbertPolynomial("remainder degree grew at step " + std::to_string(i));
        hp.gotzmann.push_back(a);
        prev_a = a;
    }
    return hp;
}

UniPoly volume_polynomial(const HilbertPolynomial& p, int n)
{
    if (n < 1) throw Error("volume_polynomial: need n >= 1");
    UniPoly q = binomial_poly(n, n) - p.poly;
    if (q.is_zero())
        throw ImproperSubscheme("p(t) = C(t+n,n): the empty subscheme is excluded");
    if (q.eval(p.r()) < 0)
        throw ImproperSubscheme("q(r) < 0: no subscheme of P^" + std::to_string(n) +
                                " has this Hilbert polynomial");
    return q;
}

LevelProfile level_profile(const HilbertPolynomial& p, int n)
{
    UniPoly q = volume_polynomial(p, n);
    const long r = p.r();

    LevelProfile lp;
    lp.n = n;
    lp.r = r;
    QQ qr = q.eval(r);
    if (!is_integer(qr))
        throw InfeasibleProfile("q(r) is not an integer");
    lp.q_r = static_cast<long>(numerator(qr));

    // |J_{>=i}| = C(n+r-i, n-i) - D^i p(r), with |J_{>=n+1}| = 0.
    std::vector<QQ> geq(n + 2, QQ(0));
    UniPoly dp = p.poly;
    for (int i = 0; i <= n; ++i) {
        geq[i] = QQ(binomial(n + r - i, n - i)) - dp.eval(r);
        dp = finite_difference(dp, 1);
    }
    lp.counts.assign(n + 1, 0);
    long total = 0;
    for (int i = 0; i <= n; ++i) {
        QQ c = geq[i] - geq[i + 1];
        if (!is_integer(c) || c < 0)
            throw InfeasibleProfile("level |J_" + std::to_string(i) + "| = " + to_string(c));
        lp.counts[i] = static_cast<long>(numerator(c));
        total += lp.counts[i];
    }
    if (total != lp.q_r)
        throw InfeasibleProfile("level counts do not sum to q(r)");
    return lp;
}

} // namespace hgf

#include "hgf/monomial.hpp"

#include <cctype>
#include <numeric>

namespace hgf {

Monomial::Monomial(std::vector<int> e) : exps(std::move(e))
{
    for (int x : exps)
        if (x < 0) throw Error("monomial exponent must be non-negative");
}

int Monomial::degree() const
{
    return std::accumulate(exps.begin(), exps.end(), 0);
}

int Monomial::min_var() const
{
    for (int i = 0; i < nvars(); ++i)
        if (exps[i] > 0) return i;
    return nvars();
}

int Monomial::max_var() const
{
    for (int i = nvars() - 1; i >= 0; --i)
        if (exps[i] > 0) return i;
    return -1;
}

int Monomial::suffix_sum(int i) const
{
    int s = 0;
    for (int k = i; k < nvars(); ++k) s += exps[k];
    return s;
}

BorelRel borel_compare(const Monomial& a, const Monomial& b)
{
    if (a.nvars() != b.nvars())
        throw LengthMismatch("borel_compare: different variable counts");
    if (a.degree() != b.degree())
        throw DegreeMismatch("borel_compare: different degrees");
    if (a == b) return BorelRel::Equal;

    bool ge = true, le = true;
    int sa = 0, sb = 0;
    for (int i = a.nvars() - 1; i >= 1; --i) {
        sa += a.exps[i];
        sb += b.exps[i];
        if (sa < sb) ge = false;
        if (sa > sb) le = false;
    }
    if (ge) return BorelRel::Greater;
    if (le) return BorelRel::Less;
    return BorelRel::Incomparable;
}

std::optional<Monomial> apply_move(const Monomial& m, const Move& mv)
{
    const int n = m.nvars() - 1;
    std::vector<int> e = m.exps;
    if (mv.kind == Move::Kind::Increasing) {
        if (mv.index < 0 || mv.index >= n)
            throw Error("increasing move index out of range");
        if (e[mv.index] == 0) return std::nullopt;
        --e[mv.index];
        ++e[mv.index + 1];
    } else {
        if (mv.index <= 0 || mv.index > n)
            throw Error("decreasing move index out of range");
        if (e[mv.index] == 0) return std::nullopt;
        --e[mv.index];
        ++e[mv.index - 1];
    }
    return Monomial(std::move(e));
}

bool offset_is_decreasing(const Offset& o)
{
    int total = std::accumulate(o.delta.begin(), o.delta.end(), 0);
    if (total != 0)
        throw NonZeroSum("offset components must sum to zero");
    int s = 0;
    for (int i = static_cast<int>(o.delta.size()) - 1; i >= 1; --i) {
        s += o.delta[i];
        if (s > 0) return false;
    }
    return true;
}

std::string format_monomial(const Monomial& m, int var_offset)
{
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + var_offset);
        if (m.exps[i] > 1) {
            out += '^';
            out += std::to_string(m.exps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& text, int nvars)
{
    std::vector<int> e(nvars, 0);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto read_uint = [&]() -> long {
        std::size_t start = pos;
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseError("exponent too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected a number", pos);
        return v;
    };

    skip_ws();
    if (pos < text.size() && text[pos] == '1' && pos + 1 >= text.size()) {
        return Monomial(std::move(e));
    }
    bool first = true;
    while (true) {
        skip_ws();
        if (!first) {
            if (pos >= text.size()) break;
            if (text[pos] != '*')
                throw ParseError("expected '*' between factors", pos);
            ++pos;
            skip_ws();
        }
        if (pos >= text.size() || text[pos] != 'x')
            throw ParseError("expected variable 'x<i>'", pos);
        ++pos;
        long var = read_uint();
        if (var >= nvars)
            throw ParseError("variable index out of range", pos);
        long exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            exp = read_uint();
        }
        e[var] += static_cast<int>(exp);
        first = false;
        skip_ws();
        if (pos >= text.size()) break;
    }
    return Monomial(std::move(e));
}

} // namespace hgf

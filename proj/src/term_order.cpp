#include "hgf/term_order.hpp"

#include <algorithm>

#include "hgf/errors.hpp"

namespace hgf {

namespace {

int matrix_rank(std::vector<std::vector<QQ>> m)
{
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            QQ f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    return static_cast<int>(row);
}

} // namespace

TermOrderMatrix TermOrderMatrix::from_rows(std::vector<std::vector<QQ>> rows)
{
    if (rows.empty()) throw InvalidTermOrder("empty matrix");
    const std::size_t nv = rows[0].size();
    if (nv < 1) throw InvalidTermOrder("no variables");
    for (const auto& r : rows)
        if (r.size() != nv) throw InvalidTermOrder("ragged matrix rows");
    if (rows.size() != nv)
        throw InvalidTermOrder("matrix must be square (one row per variable)");
    if (matrix_rank(rows) != static_cast<int>(nv))
        throw InvalidTermOrder("matrix is rank-deficient");

    // Refines x0 < ... < xn: first nonzero of M(e_k - e_{k-1}) positive.
    for (std::size_t k = 1; k < nv; ++k) {
        for (const auto& r : rows) {
            QQ d = r[k] - r[k - 1];
            if (d == 0) continue;
            if (d < 0)
                throw InvalidTermOrder("order does not refine x" + std::to_string(k - 1) +
                                       " < x" + std::to_string(k));
            break;
        }
    }
    // 1 < x_i: first nonzero entry of each column positive.
    for (std::size_t k = 0; k < nv; ++k) {
        for (const auto& r : rows) {
            if (r[k] == 0) continue;
            if (r[k] < 0)
                throw InvalidTermOrder("order compares x" + std::to_string(k) + " < 1");
            break;
        }
    }
    TermOrderMatrix M;
    M.rows = std::move(rows);
    return M;
}

TermOrderMatrix TermOrderMatrix::deglex(int nvars)
{
    std::vector<std::vector<QQ>> rows;
    rows.emplace_back(nvars, QQ(1));
    for (int i = nvars - 1; i >= 1; --i) {
        std::vector<QQ> r(nvars, QQ(0));
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    return from_rows(std::move(rows));
}

TermOrderMatrix TermOrderMatrix::revlex(int nvars)
{
    std::vector<std::vector<QQ>> rows;
    rows.emplace_back(nvars, QQ(1));
    for (int i = 0; i < nvars - 1; ++i) {
        std::vector<QQ> r(nvars, QQ(0));
        r[i] = -1;
        rows.push_back(std::move(r));
    }
    return from_rows(std::move(rows));
}

std::string TermOrderMatrix::fingerprint() const
{
    std::string out;
    for (const auto& r : rows) {
        for (const auto& q : r) {
            out += to_string(q);
            out += ',';
        }
        out += ';';
    }
    return out;
}

Cmp term_order_compare(const TermOrderMatrix& M, const Monomial& a, const Monomial& b)
{
    if (a.nvars() != M.nvars() || b.nvars() != M.nvars())
        throw LengthMismatch("term_order_compare: dimension mismatch");
    for (const auto& r : M.rows) {
        QQ s = 0;
        for (int i = 0; i < M.nvars(); ++i)
            s += r[i] * (a.exps[i] - b.exps[i]);
        if (s > 0) return Cmp::Greater;
        if (s < 0) return Cmp::Less;
    }
    return Cmp::Equal;
}

Cmp weight_compare(const WeightVector& w, const Monomial& a, const Monomial& b)
{
    if (a.nvars() != w.nvars() || b.nvars() != w.nvars())
        throw LengthMismatch("weight_compare: dimension mismatch");
    QQ s = 0;
    for (int i = 0; i < w.nvars(); ++i)
        s += w.w[i] * (a.exps[i] - b.exps[i]);
    if (s > 0) return Cmp::Greater;
    if (s < 0) return Cmp::Less;
    return Cmp::Equal;
}

TermOrderMatrix term_order_from_weight(const WeightVector& w, const TermOrderMatrix& tiebreak)
{
    const int nv = tiebreak.nvars();
    if (w.nvars() != nv)
        throw InvalidWeight("weight dimension does not match the tiebreak");

    // Equal-degree comparisons are invariant under adding multiples of
    // (1,...,1), so a zero or negative entry is shifted into positivity.
    std::vector<QQ> row = w.w;
    QQ mn = row[0];
    for (const QQ& q : row) mn = std::min(mn, q);
    if (mn <= 0) {
        QQ c = 1 - mn;
        for (QQ& q : row) q += c;
    }

    std::vector<std::vector<QQ>> candidate;
    candidate.push_back(row);
    for (const auto& r : tiebreak.rows) candidate.push_back(r);

    // Keep rows that increase the rank until the matrix is square.
    std::vector<std::vector<QQ>> rows;
    for (const auto& r : candidate) {
        if (static_cast<int>(rows.size()) == nv) break;
        rows.push_back(r);
        if (matrix_rank(rows) != static_cast<int>(rows.size())) rows.pop_back();
    }
    if (static_cast<int>(rows.size()) != nv)
        throw InvalidWeight("weight plus tiebreak does not span a full order");
    try {
        return TermOrderMatrix::from_rows(std::move(rows));
    } catch (const InvalidTermOrder& e) {
        throw InvalidWeight(std::string("weight does not induce a term order: ") + e.what());
    }
}

} // namespace hgf

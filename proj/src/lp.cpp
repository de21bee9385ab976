// Exact-rational two-phase simplex with Bland's rule, dense tableau.
// Problem sizes here are tiny (hundreds of rows, ~a dozen columns), so
// simplicity and exactness win over sparse cleverness.

#include <algorithm>
#include <vector>

#include "hgf/cone.hpp"
#include "hgf/errors.hpp"

namespace hgf {

namespace {

struct Simplex {
    // max c.x  s.t.  A x = b, x >= 0, all b >= 0 after setup.
    int m, n; // rows, structural+slack columns (artificials appended)
    std::vector<std::vector<QQ>> A;
    std::vector<QQ> b, c;
    std::vector<int> slack_col; // per row: its +1 slack column, or -1
    std::vector<int> basis;
    std::vector<char> in_basis;
    std::vector<QQ> red; // maintained reduced-cost row

    // Returns false when the phase-1 optimum is nonzero (infeasible).
    bool solve(std::vector<QQ>& x, QQ& objective)
    {
        // Rows whose slack has coefficient +1 start basic on it; only the
        // remaining rows (equalities, flipped rows) get an artificial.
        std::vector<int> art_rows;
        for (int i = 0; i < m; ++i)
            if (slack_col[i] < 0) art_rows.push_back(i);
        const int total = n + static_cast<int>(art_rows.size());
        for (auto& row : A) row.resize(total, QQ(0));
        basis.resize(m);
        in_basis.assign(total, 0);
        for (int i = 0; i < m; ++i) {
            if (slack_col[i] >= 0) {
                basis[i] = slack_col[i];
                in_basis[slack_col[i]] = 1;
            }
        }
        for (std::size_t k = 0; k < art_rows.size(); ++k) {
            A[art_rows[k]][n + k] = 1;
            basis[art_rows[k]] = n + static_cast<int>(k);
            in_basis[n + k] = 1;
        }

        // Phase 1: minimize the sum of artificials.
        if (!art_rows.empty()) {
            std::vector<QQ> cost(total, QQ(0));
            for (int j = n; j < total; ++j) cost[j] = -1;
            reset_reduced_costs(cost, total);
            run(total, total);
            QQ phase1 = 0;
            for (int i = 0; i < m; ++i)
                if (basis[i] >= n) phase1 += b[i];
            if (phase1 != 0) return false;
        }

        // Pivot remaining zero-valued artificials out where possible; rows
        // with no structural entry are redundant and stay inert.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < n) continue;
            int enter = -1;
            for (int j = 0; j < n; ++j)
                if (A[i][j] != 0) { enter = j; break; }
            if (enter >= 0) pivot(i, enter, total);
        }

        // Phase 2: artificial columns are never allowed back in.
        std::vector<QQ> cost2(total, QQ(0));
        for (int j = 0; j < n; ++j) cost2[j] = c[j];
        reset_reduced_costs(cost2, total);
        run(n, total);

        x.assign(n, QQ(0));
        objective = 0;
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) x[basis[i]] = b[i];
        for (int j = 0; j < n; ++j) objective += c[j] * x[j];
        return true;
    }

private:
    void reset_reduced_costs(const std::vector<QQ>& cost, int total)
    {
        red = cost;
        for (int i = 0; i < m; ++i) {
            if (cost[basis[i]] == 0) continue;
            const QQ& cb = cost[basis[i]];
            for (int j = 0; j < total; ++j)
                if (A[i][j] != 0) red[j] -= cb * A[i][j];
        }
    }

    void pivot(int row, int col, int total)
    {
        QQ p = A[row][col];
        for (int j = 0; j < total; ++j)
            if (A[row][j] != 0) A[row][j] /= p;
        b[row] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row || A[i][col] == 0) continue;
            QQ f = A[i][col];
            for (int j = 0; j < total; ++j)
                if (A[row][j] != 0) A[i][j] -= f * A[row][j];
            b[i] -= f * b[row];
        }
        if (red[col] != 0) {
            QQ f = red[col];
            for (int j = 0; j < total; ++j)
                if (A[row][j] != 0) red[j] -= f * A[row][j];
        }
        in_basis[basis[row]] = 0;
        in_basis[col] = 1;
        basis[row] = col;
    }

    void run(int allowed, int total)
    {
        // Dantzig's rule for speed; fall back to Bland's rule (guaranteed
        // termination) if the iteration count suggests degenerate cycling.
        const long bland_after = 6L * m + 200;
        long iteration = 0;
        while (true) {
            const bool bland = ++iteration > bland_after;
            int enter = -1;
            for (int j = 0; j < allowed; ++j) {
                if (in_basis[j] || !(red[j] > 0)) continue;
                if (bland) { enter = j; break; }
                if (enter < 0 || red[j] > red[enter]) enter = j;
            }
            if (enter < 0) return;
            int leave = -1;
            QQ best;
            for (int i = 0; i < m; ++i) {
                if (A[i][enter] <= 0) continue;
                QQ ratio = b[i] / A[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return; // unbounded; capped objectives avoid this
            pivot(leave, enter, total);
        }
    }
};

} // namespace

Cone Cone::closure() const
{
    Cone out;
    out.dim_ambient = dim_ambient;
    out.nonstrict = nonstrict;
    for (const auto& row : strict) out.nonstrict.push_back(row);
    out.equalities = equalities;
    return out;
}

std::vector<NormalRow> cone_w_rows(int nvars)
{
    std::vector<NormalRow> rows;
    NormalRow first(nvars, 0);
    first[0] = 1;
    rows.push_back(std::move(first)); // w0 > 0
    for (int i = 1; i < nvars; ++i) {
        NormalRow r(nvars, 0);
        r[i] = 1;
        r[i - 1] = -1; // w_i > w_{i-1}
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

ZZ dot_zz(const NormalRow& v, const std::vector<ZZ>& p)
{
    ZZ s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += ZZ(v[i]) * p[i];
    return s;
}

} // namespace

bool cone_contains(const Cone& c, const std::vector<ZZ>& point)
{
    for (const auto& v : c.strict)
        if (dot_zz(v, point) <= 0) return false;
    for (const auto& v : c.nonstrict)
        if (dot_zz(v, point) < 0) return false;
    for (const auto& v : c.equalities)
        if (dot_zz(v, point) != 0) return false;
    return true;
}

bool cone_closure_contains(const Cone& c, const std::vector<ZZ>& point)
{
    for (const auto& v : c.strict)
        if (dot_zz(v, point) < 0) return false;
    for (const auto& v : c.nonstrict)
        if (dot_zz(v, point) < 0) return false;
    for (const auto& v : c.equalities)
        if (dot_zz(v, point) != 0) return false;
    return true;
}

std::optional<std::vector<ZZ>> strict_feasible(const Cone& c)
{
    const int d = c.dim_ambient;
    // Variables: w = u - v with u, v >= 0, plus t = tp - tm.
    // Columns: u_0..u_{d-1}, v_0..v_{d-1}, tp, tm, then one slack per
    // inequality row.
    const int nw = 2 * d;
    const int ncore = nw + 2;

    struct RawRow { std::vector<QQ> a; QQ rhs; int kind; }; // 0: <=, 1: >=, 2: ==
    std::vector<RawRow> raws;

    auto normal_row = [&](const NormalRow& v, bool with_t) {
        RawRow r;
        r.a.assign(ncore, QQ(0));
        for (int i = 0; i < d; ++i) {
            r.a[i] = v[i];
            r.a[d + i] = -v[i];
        }
        if (with_t) {
            r.a[nw] = -1; // -tp
            r.a[nw + 1] = 1; // +tm
        }
        r.rhs = 0;
        r.kind = 1; // >= 0
        return r;
    };

    for (const auto& v : c.strict) raws.push_back(normal_row(v, true));
    for (const auto& v : c.nonstrict) raws.push_back(normal_row(v, false));
    for (const auto& v : c.equalities) {
        RawRow r = normal_row(v, false);
        r.kind = 2;
        raws.push_back(r);
    }
    { // sum w = d (scale normalization)
        RawRow r;
        r.a.assign(ncore, QQ(0));
        for (int i = 0; i < d; ++i) {
            r.a[i] = 1;
            r.a[d + i] = -1;
        }
        r.rhs = d;
        r.kind = 2;
        raws.push_back(r);
    }
    { // t <= 1 keeps the objective bounded
        RawRow r;
        r.a.assign(ncore, QQ(0));
        r.a[nw] = 1;
        r.a[nw + 1] = -1;
        r.rhs = 1;
        r.kind = 0;
        raws.push_back(r);
    }

    int slacks = 0;
    for (const auto& r : raws)
        if (r.kind != 2) ++slacks;

    Simplex sx;
    sx.m = static_cast<int>(raws.size());
    sx.n = ncore + slacks;
    sx.A.assign(sx.m, std::vector<QQ>(sx.n, QQ(0)));
    sx.b.assign(sx.m, QQ(0));
    sx.c.assign(sx.n, QQ(0));
    sx.slack_col.assign(sx.m, -1);
    sx.c[nw] = 1;
    sx.c[nw + 1] = -1; // max t = tp - tm

    int slack_at = ncore;
    for (int i = 0; i < sx.m; ++i) {
        RawRow r = raws[i];
        if (r.kind == 1) { // >=  ->  -a x <= -rhs
            for (QQ& q : r.a) q = -q;
            r.rhs = -r.rhs;
            r.kind = 0;
        }
        for (int j = 0; j < ncore; ++j) sx.A[i][j] = r.a[j];
        sx.b[i] = r.rhs;
        if (r.kind == 0) {
            sx.A[i][slack_at] = 1;
            sx.slack_col[i] = slack_at;
            ++slack_at;
        }
        if (sx.b[i] < 0) {
            for (int j = 0; j < sx.n; ++j) sx.A[i][j] = -sx.A[i][j];
            sx.b[i] = -sx.b[i];
            sx.slack_col[i] = -1; // slack coefficient flipped to -1
        }
    }

    std::vector<QQ> x;
    QQ objective;
    if (!sx.solve(x, objective)) return std::nullopt;
    if (objective <= 0) return std::nullopt;

    std::vector<QQ> w(d);
    for (int i = 0; i < d; ++i) w[i] = x[i] - x[d + i];
    std::vector<ZZ> point = primitive_vector(w);
    // The primitive direction certifies the same strict system.
    if (!cone_contains(c, point))
        throw Error("strict_feasible: optimum failed certification");
    return point;
}

} // namespace hgf

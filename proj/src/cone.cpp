// Double description: extreme rays of closure H-representations. All cones
// in this project live inside the closed simplicial cone W-bar, so the
// insertion loop is seeded with the known rays of W-bar and the remaining
// halfspaces are added one at a time, maintaining the combinatorial
// adjacency test of Fukuda-Prodon (valid for pointed cones).

#include <algorithm>
#include <set>

#include "hgf/cone.hpp"
#include "hgf/errors.hpp"

namespace hgf {

namespace {

struct Ray {
    std::vector<ZZ> dir;          // primitive
    std::vector<char> tight;      // per processed row: <row, dir> == 0
};

ZZ dot(const NormalRow& v, const std::vector<ZZ>& p)
{
    ZZ s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += ZZ(v[i]) * p[i];
    return s;
}

bool subset_tight(const Ray& a, const Ray& b, const Ray& other)
{
    // Z(a) ∩ Z(b) ⊆ Z(other)?
    for (std::size_t k = 0; k < a.tight.size(); ++k)
        if (a.tight[k] && b.tight[k] && !other.tight[k]) return false;
    return true;
}

} // namespace

std::vector<std::vector<ZZ>> cone_rays(const Cone& c)
{
    const int d = c.dim_ambient;
    if (!c.strict.empty())
        throw Error("cone_rays: expected a closure H-representation");

    // Separate the W-bar rows (which seed the simplicial start) from the
    // rows that still need insertion; equalities are inserted as two
    // opposite halfspaces.
    std::vector<NormalRow> wbar = cone_w_rows(d);
    std::vector<char> have_w(d, 0);
    std::vector<NormalRow> to_insert;
    for (const auto& row : c.nonstrict) {
        auto it = std::find(wbar.begin(), wbar.end(), row);
        if (it != wbar.end())
            have_w[it - wbar.begin()] = true;
        else
            to_insert.push_back(row);
    }
    for (int i = 0; i < d; ++i)
        if (!have_w[i])
            throw Error("cone_rays: H-representation must contain the W-bar rows");
    for (const auto& row : c.equalities) {
        to_insert.push_back(row);
        NormalRow neg(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
        to_insert.push_back(std::move(neg));
    }

    const std::size_t total_rows = wbar.size() + to_insert.size();

    // Rays of W-bar: e_n, e_{n-1}+e_n, ..., (1,...,1).
    std::vector<Ray> rays;
    for (int k = d - 1; k >= 0; --k) {
        Ray r;
        r.dir.assign(d, ZZ(0));
        for (int i = k; i < d; ++i) r.dir[i] = 1;
        r.tight.assign(total_rows, 0);
        for (std::size_t row = 0; row < wbar.size(); ++row)
            r.tight[row] = dot(wbar[row], r.dir) == 0;
        rays.push_back(std::move(r));
    }

    for (std::size_t step = 0; step < to_insert.size(); ++step) {
        const NormalRow& h = to_insert[step];
        const std::size_t row_index = wbar.size() + step;
        std::vector<ZZ> value(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) value[i] = dot(h, rays[i].dir);

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (value[i] < 0) continue;
            Ray r = rays[i];
            r.tight[row_index] = value[i] == 0;
            next.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (value[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (value[j] >= 0) continue;
                // Adjacency: no third ray is tight on everything both share.
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == i || k == j) continue;
                    if (subset_tight(rays[i], rays[j], rays[k])) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr;
                nr.dir.assign(d, ZZ(0));
                for (int t = 0; t < d; ++t)
                    nr.dir[t] = value[i] * rays[j].dir[t] - value[j] * rays[i].dir[t];
                nr.dir = primitive_vector(nr.dir);
                nr.tight.assign(total_rows, 0);
                for (std::size_t row = 0; row < wbar.size(); ++row)
                    nr.tight[row] = dot(wbar[row], nr.dir) == 0;
                for (std::size_t s = 0; s <= step; ++s)
                    nr.tight[wbar.size() + s] = dot(to_insert[s], nr.dir) == 0;
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::set<std::vector<ZZ>> unique;
    for (const auto& r : rays) {
        bool zero = std::all_of(r.dir.begin(), r.dir.end(), [](const ZZ& z) { return z == 0; });
        if (!zero) unique.insert(r.dir);
    }
    if (unique.empty())
        throw EmptyCone("cone reduced to the origin");
    return {unique.begin(), unique.end()};
}

} // namespace hgf

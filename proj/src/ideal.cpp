#include "hgf/ideal.hpp"

#include <algorithm>
#include <set>

#include "hgf/errors.hpp"

namespace hgf {

namespace {

// Decreasing DegLex for equal-degree monomials with x0 < ... < xn: compare
// exponents from the largest variable down.
bool deglex_desc(const Monomial& a, const Monomial& b)
{
    for (int i = a.nvars() - 1; i >= 1; --i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    }
    return false;
}

void gen_monomials(int n, long r, std::vector<int>& cur, int var, long left,
                   std::vector<Monomial>& out)
{
    if (var == n) {
        cur[var] = static_cast<int>(left);
        out.emplace_back(cur);
        return;
    }
    for (long e = 0; e <= left; ++e) {
        cur[var] = static_cast<int>(e);
        gen_monomials(n, r, cur, var + 1, left - e, out);
    }
}

} // namespace

int DegreeContext::index_of(const Monomial& m) const { return index_of(m.exps); }

int DegreeContext::index_of(const std::vector<int>& exps) const
{
    auto it = index_.find(exps);
    return it == index_.end() ? -1 : it->second;
}

std::shared_ptr<const DegreeContext> DegreeContext::make(int n, long r)
{
    auto ctx = std::make_shared<DegreeContext>();
    ctx->n = n;
    ctx->r = r;
    std::vector<int> cur(n + 1, 0);
    gen_monomials(n, r, cur, 0, r, ctx->monomials);
    std::sort(ctx->monomials.begin(), ctx->monomials.end(), deglex_desc);

    const std::size_t N = ctx->monomials.size();
    for (std::size_t i = 0; i < N; ++i)
        ctx->index_[ctx->monomials[i].exps] = static_cast<int>(i);

    ctx->min_var_of.resize(N);
    ctx->up_moves.resize(N);
    ctx->down_moves.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        const Monomial& m = ctx->monomials[i];
        ctx->min_var_of[i] = m.min_var();
        for (int v = 0; v < n; ++v) {
            if (auto img = apply_move(m, Move::increasing(v)))
                ctx->up_moves[i].push_back(ctx->index_[img->exps]);
        }
        for (int v = 1; v <= n; ++v) {
            if (auto img = apply_move(m, Move::decreasing(v)))
                ctx->down_moves[i].push_back(ctx->index_[img->exps]);
        }
    }
    return ctx;
}

std::vector<Monomial> StronglyStableIdeal::gens() const
{
    std::vector<Monomial> out;
    out.reserve(size());
    for (std::size_t i = members.find_first(); i != MonomialSet::npos; i = members.find_next(i))
        out.push_back(ctx->monomials[i]);
    return out;
}

bool SaturatedGenerators::operator<(const SaturatedGenerators& o) const
{
    auto key = [](const SaturatedGenerators& s) {
        std::vector<std::vector<int>> k;
        for (const auto& m : s.gens) k.push_back(m.exps);
        return k;
    };
    return key(*this) < key(o);
}

std::string SaturatedGenerators::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += format_monomial(gens[i], var_offset);
    }
    return out + ")";
}

std::vector<StronglyStableIdeal> enumerate_ideals(const HilbertPolynomial& p, int n)
{
    LevelProfile profile = level_profile(p, n);
    if (profile.r == 0)
        throw EmptyDegree("Gotzmann number 0: nothing to enumerate");

    auto ctx = DegreeContext::make(n, profile.r);
    const int N = static_cast<int>(ctx->size());

    std::vector<StronglyStableIdeal> out;
    MonomialSet chosen(N);
    std::vector<long> cnt(n + 1, 0);

    // live[lvl]: unprocessed monomials of the level that can still be
    // selected. Excluding a monomial forces its whole Borel down-set out
    // (selection needs the full up-set), so exclusions propagate downward
    // through dead-reason counters; this makes the "cannot be completed by
    // remaining monomials" prune exact.
    std::vector<long> live(n + 1, 0);
    for (int i = 0; i < N; ++i) ++live[ctx->min_var_of[i]];
    for (int lvl = 0; lvl <= n; ++lvl)
        if (live[lvl] < profile.counts[lvl])
            throw InfeasibleProfile("level count exceeds the size of T^n_r");

    std::vector<int> dead_reasons(N, 0);
    std::vector<int> mark_stack;
    std::vector<int> todo;
    // Marks the down-set of an excluded monomial, aborting as soon as some
    // level can no longer reach its count; appends every touched rank to
    // mark_stack (for the undo) and reports whether all levels survived.
    auto mark_dead = [&](int pos, std::size_t& marked) {
        todo.assign(1, pos);
        while (!todo.empty()) {
            int cur = todo.back();
            todo.pop_back();
            for (int d : ctx->down_moves[cur]) {
                mark_stack.push_back(d);
                ++marked;
                if (++dead_reasons[d] == 1) {
                    const int l = ctx->min_var_of[d];
                    if (--live[l] + cnt[l] < profile.counts[l]) return false;
                    todo.push_back(d);
                }
            }
        }
        return true;
    };
    auto unmark_dead = [&](std::size_t count) {
        while (count--) {
            int d = mark_stack.back();
            mark_stack.pop_back();
            if (--dead_reasons[d] == 0) ++live[ctx->min_var_of[d]];
        }
    };

    // DFS with the include branch first, so the lexicographic ideal is
    // emitted first and ids follow the canonical order (descending
    // characteristic vectors). Depth is |T^n_r|, small at desk scale.
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == N) {
            StronglyStableIdeal J;
            J.ctx = ctx;
            J.members = chosen;
            J.id = static_cast<int>(out.size());
            J.level_counts = cnt;
            out.push_back(std::move(J));
            return;
        }
        const int lvl = ctx->min_var_of[pos];
        const bool was_dead = dead_reasons[pos] > 0;

        bool can_include = !was_dead && cnt[lvl] < profile.counts[lvl];
        if (can_include)
            for (int im : ctx->up_moves[pos])
                if (!chosen.test(im)) { can_include = false; break; }
        if (can_include) {
            chosen.set(pos);
            ++cnt[lvl];
            --live[lvl];
            self(self, pos + 1);
            chosen.reset(pos);
            --cnt[lvl];
            ++live[lvl];
        }

        // Exclude branch: drop the monomial and everything below it.
        if (was_dead) {
            self(self, pos + 1);
            return;
        }
        bool feasible = cnt[lvl] + --live[lvl] >= profile.counts[lvl];
        std::size_t marked = 0;
        if (feasible) feasible = mark_dead(pos, marked);
        if (feasible) self(self, pos + 1);
        unmark_dead(marked);
        ++live[lvl];
    };
    rec(rec, 0);
    return out;
}

bool is_borel_set(const std::vector<Monomial>& monomials)
{
    if (monomials.empty()) return true;
    const int deg = monomials[0].degree();
    const int nv = monomials[0].nvars();
    for (const auto& m : monomials) {
        if (m.nvars() != nv) throw LengthMismatch("is_borel_set: mixed variable counts");
        if (m.degree() != deg) throw MixedDegrees("is_borel_set: mixed degrees");
    }
    std::set<std::vector<int>> members;
    for (const auto& m : monomials) members.insert(m.exps);
    for (const auto& m : monomials) {
        for (int v = 0; v < nv - 1; ++v) {
            if (auto img = apply_move(m, Move::increasing(v)))
                if (!members.count(img->exps)) return false;
        }
    }
    return true;
}

namespace {

// Shared saturation core: strip powers of the given variable, deduplicate,
// drop non-minimal elements under divisibility.
std::vector<Monomial> strip_and_minimalize(std::vector<std::vector<int>> exps, int strip_var)
{
    std::set<std::vector<int>> stripped;
    for (auto& e : exps) {
        e[strip_var] = 0;
        stripped.insert(std::move(e));
    }
    auto divides = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::vector<Monomial> out;
    for (const auto& e : stripped) {
        bool minimal = true;
        for (const auto& f : stripped) {
            if (f == e) continue;
            if (divides(f, e)) { minimal = false; break; }
        }
        if (minimal) out.emplace_back(e);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return deglex_desc(a, b);
    });
    return out;
}

} // namespace

SaturatedGenerators saturate(const StronglyStableIdeal& J)
{
    std::vector<std::vector<int>> exps;
    for (const auto& m : J.gens()) exps.push_back(m.exps);
    SaturatedGenerators sat;
    sat.gens = strip_and_minimalize(std::move(exps), 0);
    return sat;
}

SaturatedGenerators hyperplane_section(const StronglyStableIdeal& J)
{
    std::vector<std::vector<int>> exps;
    for (std::size_t i = J.members.find_first(); i != MonomialSet::npos;
         i = J.members.find_next(i)) {
        if (J.ctx->min_var_of[i] < 1) continue;
        const auto& e = J.ctx->monomials[i].exps;
        exps.emplace_back(e.begin() + 1, e.end()); // reinterpret in x1..xn
    }
    SaturatedGenerators sat;
    sat.var_offset = 1;
    if (exps.empty()) {
        // J_{>=1} empty cannot happen for a proper ideal; guard anyway.
        return sat;
    }
    sat.gens = strip_and_minimalize(std::move(exps), 0);
    return sat;
}

std::vector<Monomial> degree_piece(const SaturatedGenerators& sat, int nvars, long r)
{
    std::set<std::vector<int>> out;
    // Multiply each generator by every monomial of the complementary degree.
    for (const auto& g : sat.gens) {
        long left = r - g.degree();
        if (left < 0) continue;
        std::vector<Monomial> fillers;
        std::vector<int> cur(nvars, 0);
        gen_monomials(nvars - 1, left, cur, 0, left, fillers);
        for (const auto& f : fillers) {
            std::vector<int> e = g.exps;
            for (int i = 0; i < nvars; ++i) e[i] += f.exps[i];
            out.insert(std::move(e));
        }
    }
    std::vector<Monomial> res;
    for (const auto& e : out) res.emplace_back(e);
    std::sort(res.begin(), res.end(), deglex_desc);
    return res;
}

BorelExtremes borel_extremes(const StronglyStableIdeal& J)
{
    // The Borel set is closed upward and its complement downward, so an
    // element of J is minimal iff no single admissible decreasing move stays
    // in J, and an element of the complement is maximal iff every admissible
    // increasing move lands in J.
    BorelExtremes ext;
    const auto& ctx = *J.ctx;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (J.members.test(i)) {
            bool minimal = true;
            for (int im : ctx.down_moves[i])
                if (J.members.test(im)) { minimal = false; break; }
            if (minimal) ext.min_members.push_back(static_cast<int>(i));
        } else {
            bool maximal = true;
            for (int im : ctx.up_moves[i])
                if (!J.members.test(im)) { maximal = false; break; }
            if (maximal) ext.max_complement.push_back(static_cast<int>(i));
        }
    }
    return ext;
}

bool is_hilb_segment(const StronglyStableIdeal& J, const TermOrderMatrix& M)
{
    BorelExtremes ext = borel_extremes(J);
    for (int a : ext.min_members)
        for (int b : ext.max_complement)
            if (term_order_compare(M, J.ctx->monomials[a], J.ctx->monomials[b]) != Cmp::Greater)
                return false;
    return true;
}

bool is_hilb_segment(const StronglyStableIdeal& J, const WeightVector& w)
{
    BorelExtremes ext = borel_extremes(J);
    bool tie = false;
    for (int a : ext.min_members) {
        for (int b : ext.max_complement) {
            Cmp c = weight_compare(w, J.ctx->monomials[a], J.ctx->monomials[b]);
            if (c == Cmp::Less) return false;
            if (c == Cmp::Equal) tie = true;
        }
    }
    if (tie)
        throw AmbiguousUnderWeights("weight ties on a deciding pair");
    return true;
}

} // namespace hgf

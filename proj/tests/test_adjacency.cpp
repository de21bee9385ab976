#include <doctest.h>

#include <set>

#include "hgf/adjacency.hpp"
#include "hgf/errors.hpp"

using namespace hgf;

namespace {

std::vector<StronglyStableIdeal> enumerate_text(const char* hilbert, int n)
{
    return enumerate_ideals(gotzmann_decomposition(parse_polynomial(hilbert)), n);
}

const StronglyStableIdeal& by_saturation(const std::vector<StronglyStableIdeal>& ideals,
                                         const std::string& sat)
{
    for (const auto& J : ideals)
        if (saturate(J).str() == sat) return J;
    REQUIRE(false);
    return ideals.front();
}

std::set<std::vector<int>> offset_set(const EdgeLabel& l)
{
    std::set<std::vector<int>> out;
    for (const auto& o : l.offsets) out.insert(o.delta);
    return out;
}

} // namespace

TEST_CASE("BA1: the two p = 3 ideals are adjacent with a single swap")
{
    auto ideals = enumerate_text("3", 2);
    const auto& L = by_saturation(ideals, "(x2, x1^3)");
    const auto& J = by_saturation(ideals, "(x2^2, x1*x2, x1^2)");
    auto label = borel_adjacent(J, L);
    REQUIRE(label);
    CHECK(format_monomial(label->a) == "x0*x1^2");
    CHECK(format_monomial(label->a_prime) == "x0^2*x2");
    CHECK(offset_set(*label) == std::set<std::vector<int>>{{0, 0, 0}});
    CHECK(label->size == 1);
}

TEST_CASE("BA2: p = 5 on P^2")
{
    auto ideals = enumerate_text("5", 2);
    const auto& L = by_saturation(ideals, "(x2, x1^5)");
    const auto& J = by_saturation(ideals, "(x2^2, x1^2*x2, x1^3)");
    auto label = borel_adjacent(L, J);
    REQUIRE(label);
    CHECK(format_monomial(label->a) == "x0^3*x1*x2");
    CHECK(format_monomial(label->a_prime) == "x0*x1^4");
    CHECK(offset_set(*label) == std::set<std::vector<int>>{{0, 0, 0}, {1, -1, 0}});
}

TEST_CASE("BA3: the 3t+1 pair with three parallel swaps")
{
    auto ideals = enumerate_text("3t+1", 3);
    const auto& J = by_saturation(ideals, "(x3^2, x2*x3, x2^2)");
    const auto& Jp = by_saturation(ideals, "(x3^2, x2*x3, x1*x3, x2^3)");
    auto label = borel_adjacent(J, Jp);
    REQUIRE(label);
    CHECK(format_monomial(label->a) == "x1^2*x2^2");
    CHECK(format_monomial(label->a_prime) == "x1^3*x3");
    CHECK(offset_set(*label) == std::set<std::vector<int>>{
                                    {0, 0, 0, 0}, {1, -1, 0, 0}, {2, -2, 0, 0}});
}

TEST_CASE("nBA1: two maximal elements on the left difference")
{
    auto ideals = enumerate_text("8", 2);
    const auto& J = by_saturation(ideals, "(x2^2, x1^2*x2, x1^6)");
    const auto& Jp = by_saturation(ideals, "(x2^3, x1*x2^2, x1^3*x2, x1^4)");
    auto res = borel_adjacent_diag(J, Jp);
    CHECK(!res.label);
    CHECK(res.failure == AdjacencyFailure::NoMaxLeft);
}

TEST_CASE("nBA2: offset sets differ")
{
    auto ideals = enumerate_text("6", 2);
    const auto& J = by_saturation(ideals, "(x2^2, x1*x2, x1^5)");
    const auto& Jp = by_saturation(ideals, "(x2^3, x1*x2^2, x1^2*x2, x1^3)");
    auto res = borel_adjacent_diag(J, Jp);
    CHECK(!res.label);
    CHECK(res.failure == AdjacencyFailure::OffsetMismatch);
}

TEST_CASE("nBA3: lex ideal of 3t+1 against the BA3 ideal")
{
    auto ideals = enumerate_text("3t+1", 3);
    const auto& L = by_saturation(ideals, "(x3, x2^4, x1*x2^3)");
    const auto& J = by_saturation(ideals, "(x3^2, x2*x3, x2^2)");
    auto res = borel_adjacent_diag(J, L);
    CHECK(!res.label);
    CHECK(res.failure == AdjacencyFailure::NoMaxLeft); // J \ L has two maxima
}

TEST_CASE("adjacency is symmetric and size-1 differences are always adjacent")
{
    auto ideals = enumerate_text("5t-2", 3);
    for (const auto& J : ideals) {
        for (const auto& K : ideals) {
            if (J.id >= K.id) continue;
            auto l1 = borel_adjacent(J, K);
            auto l2 = borel_adjacent(K, J);
            CHECK(l1.has_value() == l2.has_value());
            if (l1) {
                CHECK(l1->a == l2->a_prime);
                CHECK(l1->a_prime == l2->a);
                CHECK(offset_set(*l1) == offset_set(*l2));
                CHECK(l1->size == (J.members - K.members).count());
                // min of translated maxima agree offset by offset
                for (const auto& o : l1->offsets) {
                    std::vector<int> ea = l1->a.exps, eb = l1->a_prime.exps;
                    for (std::size_t t = 0; t < ea.size(); ++t) {
                        ea[t] += o.delta[t];
                        eb[t] += o.delta[t];
                    }
                    CHECK(Monomial(ea).min_var() == Monomial(eb).min_var());
                }
            }
            if ((J.members - K.members).count() == 1) CHECK(l1.has_value());
        }
    }
}

TEST_CASE("Borel graphs of the small worked examples")
{
    auto g5 = borel_graph_serial(enumerate_text("5", 2));
    CHECK(g5.vertices.size() == 3);
    CHECK(g5.edges.size() == 3); // K_3
    std::set<std::set<std::string>> labels5;
    for (const auto& e : g5.edges)
        labels5.insert({format_monomial(e.label.a), format_monomial(e.label.a_prime)});
    CHECK(labels5 == std::set<std::set<std::string>>{{"x0*x1^4", "x0^4*x2"},
                                                     {"x0^3*x1*x2", "x0*x1^4"},
                                                     {"x0^3*x1*x2", "x0^2*x1^3"}});

    auto g31 = borel_graph_serial(enumerate_text("3t+1", 3));
    CHECK(g31.vertices.size() == 3);
    CHECK(g31.edges.size() == 2); // path
    std::set<std::set<std::string>> labels31;
    for (const auto& e : g31.edges)
        labels31.insert({format_monomial(e.label.a), format_monomial(e.label.a_prime)});
    CHECK(labels31 == std::set<std::set<std::string>>{{"x0^3*x3", "x0*x2^3"},
                                                      {"x1^3*x3", "x1^2*x2^2"}});

    auto g52 = borel_graph_serial(enumerate_text("5t-2", 3));
    CHECK(g52.vertices.size() == 7);
    CHECK(g52.edges.size() == 12);
    CHECK(graph_connected(g52));
}

TEST_CASE("deformation generators")
{
    auto ideals = enumerate_text("3t+1", 3);
    const auto& J = by_saturation(ideals, "(x3^2, x2*x3, x2^2)");
    const auto& Jp = by_saturation(ideals, "(x3^2, x2*x3, x1*x3, x2^3)");
    auto label = borel_adjacent(J, Jp);
    REQUIRE(label);
    auto gens = deformation_generators(J, Jp, *label);
    std::size_t pencils = 0;
    std::set<std::string> pencil_text;
    for (const auto& g : gens) {
        if (!g.pencil) continue;
        ++pencils;
        pencil_text.insert(format_monomial(g.head) + "+T*" + format_monomial(*g.tail));
    }
    CHECK(pencils == 3);
    CHECK(pencil_text == std::set<std::string>{"x1^2*x2^2+T*x1^3*x3",
                                               "x0*x1*x2^2+T*x0*x1^2*x3",
                                               "x0^2*x2^2+T*x0^2*x1*x3"});
    CHECK(gens.size() == pencils + (J.members & Jp.members).count());

    // BA1: a single pencil between the two p = 3 ideals.
    auto ideals3 = enumerate_text("3", 2);
    const auto& J3 = by_saturation(ideals3, "(x2^2, x1*x2, x1^2)");
    const auto& L3 = by_saturation(ideals3, "(x2, x1^3)");
    auto label3 = borel_adjacent(J3, L3);
    REQUIRE(label3);
    auto gens3 = deformation_generators(J3, L3, *label3);
    std::vector<std::string> pencils3;
    for (const auto& g3 : gens3)
        if (g3.pencil)
            pencils3.push_back(format_monomial(g3.head) + "+T*" + format_monomial(*g3.tail));
    CHECK(pencils3 == std::vector<std::string>{"x0*x1^2+T*x0^2*x2"});

    // A label from a different pair is rejected.
    auto g31 = borel_graph_serial(ideals);
    const auto* other = g31.find_edge(0, 1);
    REQUIRE(other);
    if (!(other->label.a == label->a))
        CHECK_THROWS_AS(deformation_generators(J, Jp, other->label), LabelMismatch);
}

TEST_CASE("syzygy lifting: BA3 passes all eight syzygies")
{
    auto ideals = enumerate_text("3t+1", 3);
    const auto& J = by_saturation(ideals, "(x3^2, x2*x3, x2^2)");
    const auto& Jp = by_saturation(ideals, "(x3^2, x2*x3, x1*x3, x2^3)");
    auto rep = verify_syzygy_lifting(J, Jp);
    CHECK(rep.lifts);
    CHECK(rep.checked == 8);
}

TEST_CASE("syzygy lifting: nBA2 forced pairing fails with the known residual")
{
    auto ideals = enumerate_text("6", 2);
    const auto& J = by_saturation(ideals, "(x2^2, x1*x2, x1^5)");
    const auto& Jp = by_saturation(ideals, "(x2^3, x1*x2^2, x1^2*x2, x1^3)");
    std::vector<std::pair<Monomial, Monomial>> pairing{
        {Monomial({4, 0, 2}), Monomial({2, 4, 0})},
        {Monomial({4, 1, 1}), Monomial({3, 3, 0})}};
    auto rep = verify_syzygy_lifting(J, Jp, pairing);
    CHECK(!rep.lifts);
    REQUIRE(rep.residual);
    CHECK(format_monomial(*rep.residual) == "x0^3*x1^4");
    CHECK(format_monomial(rep.head) == "x0^4*x1*x2");
    CHECK(rep.var_i == 1);
}

TEST_CASE("syzygy lifting holds on every edge of SI(5t-2, 3)")
{
    auto g = borel_graph_serial(enumerate_text("5t-2", 3));
    for (const auto& e : g.edges) {
        auto rep = verify_syzygy_lifting(g.vertices[e.i], g.vertices[e.j]);
        CHECK(rep.lifts);
    }
}

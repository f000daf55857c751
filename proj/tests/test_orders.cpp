#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "sperner/errors.hpp"
#include "sperner/orders.hpp"

using namespace sperner;

namespace {

// Oracle: the prefix order built pairwise from its definition,
// l(u) + l(u^-1 v) = l(v), then transitively reduced.
RankedPoset prefix_order_pairwise(const GroupSource& g) {
    int n = int(g.order());
    std::vector<std::string> labels(n);
    for (int w = 0; w < n; ++w) labels[w] = g.label(w);
    std::vector<std::pair<int, int>> relation;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (g.reflection_length(u) + g.reflection_length(g.multiply(g.inverse(u), v)) ==
                g.reflection_length(v))
                relation.emplace_back(u, v);
        }
    return RankedPoset::from_covers(std::move(labels), std::move(relation));
}

}  // namespace

TEST_CASE("prefix order rank polynomials") {
    GmpnSource s3(1, 1, 3);
    CHECK(rank_polynomial(build_prefix_order(s3)) == RankPolynomial{1, 3, 2});

    GmpnSource g212(2, 1, 2);
    CHECK(rank_polynomial(build_prefix_order(g212)) == RankPolynomial{1, 4, 3});

    GmpnSource g332(3, 3, 2);
    CHECK(rank_polynomial(build_prefix_order(g332)) == RankPolynomial{1, 3, 2});
}

TEST_CASE("prefix covers match the definitional pairwise build") {
    for (const char* spec : {"g(2,1,2)", "g(1,1,4)", "g(4,2,2)", "g(3,3,2)", "g(2,2,3)", "g(10,5,2)"}) {
        auto g = parse_group_spec(spec);
        REQUIRE(g->order() <= 500);
        auto fast = build_prefix_order(*g);
        auto oracle = prefix_order_pairwise(*g);
        CHECK(fast.covers() == oracle.covers());
        CHECK(fast.ranks() == oracle.ranks());
    }
}

TEST_CASE("pre(G(10,5,3)): rank 5, low maximal element, corrected polynomial") {
    GmpnSource g(10, 5, 3);
    auto pre = build_prefix_order(g);
    CHECK(pre.max_rank() == 5);
    // the computed polynomial: the paper prints 314 q^4 (coefficients sum
    // to 1202), enumeration gives 312 q^4 and the sum matches |G| = 1200
    auto poly = rank_polynomial(pre);
    CHECK(poly == RankPolynomial{1, 33, 287, 519, 312, 48});
    CHECK(poly_sum(poly) == 1200);
    // exactly one maximal element sits at rank 3
    int low_max = 0;
    for (int v = 0; v < pre.size(); ++v)
        if (pre.up()[v].empty() && pre.rank_of(v) == 3) ++low_max;
    CHECK(low_max == 1);
    // the 12th power is largest at q^37 > 12*3
    CHECK(poly_argmax(poly_pow(poly, 12)) == 37);

    // cross-check the covers against the definitional build
    auto oracle = prefix_order_pairwise(g);
    CHECK(pre.covers() == oracle.covers());
}

TEST_CASE("codim order: G(4,2,2) rank sizes and unranked G(4,2,4)") {
    GmpnSource g422(4, 2, 2);
    auto co = build_codim_order(g422);
    REQUIRE(co.has_rank_function());
    CHECK(rank_polynomial(co) == RankPolynomial{1, 8, 7});

    GmpnSource g213(2, 1, 3);
    auto co213 = build_codim_order(g213);
    auto pre213 = build_prefix_order(g213);
    CHECK(co213.covers() == pre213.covers());
    CHECK(co213.ranks() == pre213.ranks());

    CoxeterSource h3(CoxeterType::H3);
    auto coh3 = build_codim_order(h3);
    auto preh3 = build_prefix_order(h3);
    CHECK(coh3.covers() == preh3.covers());
    CHECK(coh3.ranks() == preh3.ranks());
}

TEST_CASE("codim relation is a partial order on small groups") {
    for (const char* spec : {"g(4,2,2)", "g(3,3,3)", "g(6,2,2)", "g(4,4,3)"}) {
        auto g = parse_group_spec(spec);
        REQUIRE(g->order() <= 500);
        int n = int(g->order());
        std::vector<int> cod(n);
        for (int w = 0; w < n; ++w) cod[w] = g->codim(w);
        std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && cod[u] + cod[g->multiply(g->inverse(u), v)] == cod[v]) rel[u][v] = 1;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (!rel[u][v]) continue;
                CHECK_FALSE(rel[v][u]);  // antisymmetry
                for (int w = 0; w < n; ++w)
                    if (rel[v][w]) CHECK(rel[u][w]);  // transitivity
            }
    }
}

TEST_CASE("orders_agree matches the Foster-Greenwood classification") {
    CHECK(orders_agree(*parse_group_spec("g(3,1,2)")));
    CHECK(orders_agree(*parse_group_spec("g(2,2,3)")));
    CHECK(orders_agree(*parse_group_spec("g(5,1,2)")));
    CHECK(orders_agree(*parse_group_spec("g(6,6,2)")));

    OrderDisagreement diff;
    CHECK_FALSE(orders_agree(*parse_group_spec("g(4,2,2)"), &diff));
    CHECK(diff.u >= 0);
    CHECK(diff.prefix_le != diff.codim_le);
    CHECK_FALSE(orders_agree(*parse_group_spec("g(3,3,3)")));
    CHECK_FALSE(orders_agree(*parse_group_spec("g(4,4,3)")));

    CHECK_THROWS_AS(build_absolute_order(*parse_group_spec("g(4,2,2)")), DomainError);
    CHECK(build_absolute_order(*parse_group_spec("g(2,1,3)")).size() == 48);
}

TEST_CASE("dihedral absolute orders are complete bipartite between ranks") {
    for (int m = 3; m <= 8; ++m) {
        GmpnSource g(m, m, 2);
        auto abs = build_absolute_order(g);
        REQUIRE(abs.max_rank() == 2);
        auto decomp = abs.rank_decomposition();
        CHECK(decomp[0].size() == 1);
        CHECK(decomp[1].size() == size_t(m));
        CHECK(decomp[2].size() == size_t(m - 1));
        // every reflection under every rotation, plus the bottom layer
        std::set<std::pair<int, int>> covers(abs.covers().begin(), abs.covers().end());
        CHECK(covers.size() == size_t(m) + size_t(m) * (m - 1));
        for (int r : decomp[1])
            for (int rho : decomp[2]) CHECK(covers.count({r, rho}));
    }
}

TEST_CASE("subword property on random reduced words") {
    std::mt19937 rng(424242);
    for (const char* spec : {"g(2,1,3)", "g(3,1,2)", "g(2,2,3)", "g(4,2,2)"}) {
        auto g = parse_group_spec(spec);
        int n = int(g->order());
        std::vector<int> len(n);
        for (int w = 0; w < n; ++w) len[w] = g->reflection_length(w);
        for (int trial = 0; trial < 200; ++trial) {
            int w = int(rng() % n);
            // random reduced word by left descents: w = t * (t^-1 w)
            std::vector<int> word;
            int cur = w;
            while (cur != g->identity_index()) {
                std::vector<int> descents;
                for (int t : g->reflections())
                    if (len[g->multiply(g->inverse(t), cur)] == len[cur] - 1) descents.push_back(t);
                REQUIRE(!descents.empty());
                int t = descents[rng() % descents.size()];
                word.push_back(t);
                cur = g->multiply(g->inverse(t), cur);
            }
            REQUIRE(int(word.size()) == len[w]);
            // every subword u is reduced and u <= w in the prefix order
            int L = int(word.size());
            for (int mask = 0; mask < (1 << L); ++mask) {
                int u = g->identity_index();
                int letters = 0;
                for (int i = 0; i < L; ++i)
                    if (mask >> i & 1) {
                        u = g->multiply(u, word[i]);
                        ++letters;
                    }
                CHECK(len[u] == letters);
                CHECK(len[u] + len[g->multiply(g->inverse(u), w)] == len[w]);
            }
        }
    }
}

TEST_CASE("claw decomposition: examples and exhaustive uniqueness") {
    GmpnGroup g212(2, 1, 2);
    auto id_factors = claw_decompose(g212, gmpn_identity(2));
    CHECK(id_factors[0] == gmpn_identity(2));
    CHECK(id_factors[1] == gmpn_identity(2));

    auto f = claw_decompose(g212, parse_element("[1,1|1,2]", 2));
    CHECK(format_element(f[0]) == "[1,0|1,2]");
    CHECK(format_element(f[1]) == "[0,1|1,2]");

    // uniqueness oracle: T_1 x (T_2 u {id}) products enumerated directly
    auto lab = claw_embedding(g212);
    std::map<int, int> seen;
    std::vector<int> t1 = lab.blocks[0], t2 = lab.blocks[1];
    t1.push_back(-1);
    t2.push_back(-1);
    for (int x1 : t1)
        for (int x2 : t2) {
            GmpnElement prod = gmpn_identity(2);
            if (x1 >= 0) prod = gmpn_multiply(2, prod, g212.element(x1));
            if (x2 >= 0) prod = gmpn_multiply(2, prod, g212.element(x2));
            ++seen[g212.index_of(prod)];
        }
    for (auto [w, count] : seen) CHECK(count == 1);
    CHECK(seen.size() == 8);

    // a reflection decomposes as itself in its own block
    for (int t : g212.reflections()) {
        auto tf = claw_decompose(g212, g212.element(t));
        int nonid = 0;
        for (const auto& x : tf)
            if (!(x == gmpn_identity(2))) ++nonid;
        CHECK(nonid == 1);
    }

    GmpnGroup g422(4, 2, 2);
    CHECK_THROWS_AS(claw_decompose(g422, gmpn_identity(2)), ParameterError);
}

TEST_CASE("claw embedding: block sizes and verification") {
    GmpnGroup g212(2, 1, 2);
    auto lab = claw_embedding(g212);  // verification runs inside
    CHECK(lab.blocks[0].size() == 1);
    CHECK(lab.blocks[1].size() == 3);

    GmpnGroup g313(3, 1, 3);
    auto lab313 = claw_embedding(g313);
    CHECK(lab313.blocks[0].size() == 2);
    CHECK(lab313.blocks[1].size() == 5);
    CHECK(lab313.blocks[2].size() == 8);
    CHECK(lab313.factors.size() == 162);

    // m = 1: T_1 is empty and the product runs over the remaining blocks
    GmpnGroup s4(1, 1, 4);
    auto lab4 = claw_embedding(s4);
    CHECK(lab4.blocks[0].empty());
    CHECK(lab4.blocks[1].size() == 1);
    CHECK(lab4.blocks[2].size() == 2);
    CHECK(lab4.blocks[3].size() == 3);

    // the coarsening has the claw-product rank polynomial
    auto coarse = claw_product_poset(s4, lab4);
    CHECK(rank_polynomial(coarse) ==
          poly_mul(poly_mul(RankPolynomial{1, 1}, RankPolynomial{1, 2}), RankPolynomial{1, 3}));
    // and it is genuinely a coarsening: every cover holds in abs(S_4)
    GmpnSource s4src(1, 1, 4);
    auto abs4 = build_prefix_order(s4src);
    for (auto [lo, hi] : coarse.covers()) CHECK(abs4.less(lo, hi));
    CHECK(coarse.covers().size() <= abs4.covers().size());
}

TEST_CASE("claw partition search: D_3 succeeds, D_4 and D_5 do not") {
    GmpnGroup d3(2, 2, 3);
    auto part = claw_partition_search(d3);
    REQUIRE(part.has_value());
    CHECK(part->size() == 3);
    CHECK((*part)[0].size() == 1);
    CHECK((*part)[1].size() == 3);
    CHECK((*part)[2].size() == 2);
    std::set<int> used;
    for (const auto& block : *part) used.insert(block.begin(), block.end());
    CHECK(used.size() == d3.reflections().size());

    CHECK_FALSE(claw_partition_search(GmpnGroup(2, 2, 4)).has_value());
    CHECK_FALSE(claw_partition_search(GmpnGroup(2, 2, 5)).has_value());

    CHECK_THROWS_AS(claw_partition_search(GmpnGroup(2, 1, 3)), ParameterError);
}

TEST_CASE("order kind parsing") {
    CHECK(parse_order_kind("prefix") == OrderKind::Prefix);
    CHECK(parse_order_kind("CODIM") == OrderKind::Codim);
    CHECK(parse_order_kind("abs") == OrderKind::Absolute);
    CHECK_THROWS_AS(parse_order_kind("weak"), ParameterError);
}

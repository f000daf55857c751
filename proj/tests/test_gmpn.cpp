#include <doctest.h>

#include <algorithm>
#include <complex>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <tuple>

#include "sperner/errors.hpp"
#include "sperner/gmpn.hpp"

using namespace sperner;

namespace {

// Oracle: closure of the reflection set under multiplication.
std::set<std::string> closure_from_reflections(const GmpnGroup& g) {
    std::set<std::string> seen;
    std::queue<GmpnElement> work;
    auto push = [&](const GmpnElement& e) {
        if (seen.insert(format_element(e)).second) work.push(e);
    };
    push(gmpn_identity(g.n()));
    while (!work.empty()) {
        GmpnElement u = work.front();
        work.pop();
        for (int t : g.reflections()) push(gmpn_multiply(g.m(), u, g.element(t)));
    }
    return seen;
}

// Oracle: BFS reflection lengths over the Cayley graph, independent of the
// implementation's formula/table path.
std::vector<int> bfs_lengths(const GmpnGroup& g) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[g.identity_index()] = 0;
    q.push(g.identity_index());
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int t : g.reflections()) {
            int v = g.index_of(gmpn_multiply(g.m(), g.element(u), g.element(t)));
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

// Oracle: floating-point rank of (M_w - I) for the monomial matrix of w,
// pivot tolerance 1e-9.
int float_codim(const GmpnElement& w, int m) {
    int n = int(w.a.size());
    std::vector<std::vector<std::complex<double>>> mat(n, std::vector<std::complex<double>>(n, 0.0));
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < n; ++k) {
        std::complex<double> z = std::polar(1.0, 2.0 * pi * w.a[k] / m);
        mat[w.sigma[k]][k] = z;  // w sends v_k to zeta^{a_k} v_{sigma(k)}
    }
    for (int i = 0; i < n; ++i) mat[i][i] -= 1.0;
    int rank = 0, row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        double best = 1e-9;
        for (int r = row; r < n; ++r)
            if (std::abs(mat[r][col]) > best) {
                best = std::abs(mat[r][col]);
                pivot = r;
            }
        if (pivot < 0) continue;
        std::swap(mat[row], mat[pivot]);
        for (int r = row + 1; r < n; ++r) {
            std::complex<double> f = mat[r][col] / mat[row][col];
            for (int c = col; c < n; ++c) mat[r][c] -= f * mat[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("make_group: orders, parameter and budget errors") {
    GmpnGroup s3(1, 1, 3);
    CHECK(s3.order() == 6);

    GmpnGroup g422(4, 2, 2);
    CHECK(g422.order() == 16);
    CHECK(closure_from_reflections(g422).size() == 16);

    GmpnGroup g1053(10, 5, 3);
    CHECK(g1053.order() == 1200);
    CHECK(closure_from_reflections(g1053).size() == 1200);

    CHECK_THROWS_AS(GmpnGroup(4, 3, 2), ParameterError);
    CHECK_THROWS_AS(GmpnGroup(0, 1, 2), ParameterError);
    CHECK_THROWS_AS(GmpnGroup(10, 1, 10), ResourceError);
    CHECK_THROWS_AS(GmpnGroup(2, 1, 3, 10), ResourceError);  // order 48 over a budget of 10
}

TEST_CASE("canonical element order is lexicographic on (a, sigma)") {
    GmpnGroup g(2, 1, 2);
    CHECK(g.label(0) == "[0,0|1,2]");
    CHECK(g.label(1) == "[0,0|2,1]");
    CHECK(g.label(7) == "[1,1|2,1]");
    for (int i = 0; i + 1 < g.order(); ++i)
        CHECK(std::make_pair(g.element(i).a, g.element(i).sigma) <
              std::make_pair(g.element(i + 1).a, g.element(i + 1).sigma));
    CHECK(g.index_of(gmpn_identity(2)) == 0);
}

TEST_CASE("multiply and inverse") {
    GmpnGroup g(2, 1, 2);
    GmpnElement id = gmpn_identity(2);
    for (int w = 0; w < g.order(); ++w) {
        CHECK(gmpn_multiply(2, id, g.element(w)) == g.element(w));
        CHECK(gmpn_multiply(2, g.element(w), gmpn_inverse(2, g.element(w))) == id);
    }

    GmpnElement x = parse_element("[1,0|1,2]", 2), y = parse_element("[0,1|1,2]", 2);
    CHECK(format_element(gmpn_multiply(2, x, y)) == "[1,1|1,2]");

    GmpnElement z = parse_element("[1,1|2,1]", 2);
    CHECK(gmpn_inverse(2, z) == z);
    CHECK(gmpn_multiply(2, z, z) == id);

    CHECK_THROWS_AS(gmpn_multiply(2, gmpn_identity(2), gmpn_identity(3)), ParameterError);

    // composition matches the action on (Z/m) x [n]: w(b,k) = (b+a_k, sigma(k))
    GmpnGroup g43(4, 1, 3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const GmpnElement& u = g43.element(int(rng() % g43.order()));
        const GmpnElement& w = g43.element(int(rng() % g43.order()));
        GmpnElement uw = gmpn_multiply(4, u, w);
        for (int k = 0; k < 3; ++k)
            for (int b = 0; b < 4; ++b) {
                int b1 = (b + w.a[k]) % 4, k1 = w.sigma[k];
                int b2 = (b1 + u.a[k1]) % 4, k2 = u.sigma[k1];
                CHECK(uw.sigma[k] == k2);
                CHECK((b + uw.a[k]) % 4 == b2);
            }
    }
}

TEST_CASE("reflections are exactly the codimension-one elements") {
    GmpnGroup g212(2, 1, 2);
    std::set<std::string> expected = {"[0,0|2,1]", "[1,1|2,1]", "[1,0|1,2]", "[0,1|1,2]"};
    std::set<std::string> got;
    for (int t : g212.reflections()) got.insert(g212.label(t));
    CHECK(got == expected);

    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {4, 2, 2}, {1, 1, 3}, {3, 1, 2}, {10, 5, 2}, {2, 2, 3}}) {
        GmpnGroup g(m, p, n);
        std::set<int> by_filter;
        for (int w = 0; w < g.order(); ++w)
            if (fixed_space_codim(g.element(w), m) == 1) by_filter.insert(w);
        std::set<int> listed(g.reflections().begin(), g.reflections().end());
        CHECK(listed == by_filter);
        long expected_count = long(m) * n * (n - 1) / 2 + long(n) * (m / p - 1);
        CHECK(long(listed.size()) == expected_count);
    }
    CHECK(GmpnGroup(4, 2, 2).reflections().size() == 6);
    CHECK(GmpnGroup(1, 1, 3).reflections().size() == 3);
}

TEST_CASE("cycle_sign_count") {
    GmpnGroup g413(4, 1, 3);
    CHECK(cycle_sign_count(gmpn_identity(3), 4) == 3);
    CHECK(cycle_sign_count(parse_element("[1,3|2,1]", 4), 4) == 1);  // sign 1+3 = 0 mod 4
    CHECK(cycle_sign_count(parse_element("[2,0|1,2]", 4), 4) == 1);

    // conjugation invariance within G(m,1,n)
    for (int u = 0; u < g413.order(); u += 7)
        for (int w = 0; w < g413.order(); w += 11) {
            GmpnElement conj = gmpn_multiply(
                4, gmpn_multiply(4, g413.element(u), g413.element(w)),
                gmpn_inverse(4, g413.element(u)));
            CHECK(cycle_sign_count(conj, 4) == cycle_sign_count(g413.element(w), 4));
        }
}

TEST_CASE("reflection_length: Shi formula vs BFS, reflections have length 1") {
    GmpnGroup g212(2, 1, 2);
    CHECK(g212.reflection_length(g212.identity_index()) == 0);
    CHECK(g212.reflection_length(parse_element("[1,1|1,2]", 2)) == 2);
    for (int t : g212.reflections()) CHECK(g212.reflection_length(t) == 1);

    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {4, 1, 2}, {1, 1, 4}, {3, 1, 3}}) {
        GmpnGroup g(m, p, n);
        auto oracle = bfs_lengths(g);
        for (int w = 0; w < g.order(); ++w) CHECK(g.reflection_length(w) == oracle[w]);
    }

    // p != 1 goes through the BFS table; cross-check against the oracle
    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{4, 2, 2}, {10, 5, 2}, {2, 2, 3}}) {
        GmpnGroup g(m, p, n);
        auto oracle = bfs_lengths(g);
        for (int w = 0; w < g.order(); ++w) CHECK(g.reflection_length(w) == oracle[w]);
        for (int t : g.reflections()) CHECK(g.reflection_length(t) == 1);
    }
}

TEST_CASE("fixed_space_codim agrees with exact structure and float rank") {
    GmpnGroup g212(2, 1, 2);
    CHECK(fixed_space_codim(gmpn_identity(2), 2) == 0);
    CHECK(fixed_space_codim(parse_element("[0,0|2,1]", 2), 2) == 1);

    // histogram over G(4,2,2): codims (0,1,2) seen (1,6,9) times
    GmpnGroup g422(4, 2, 2);
    std::map<int, int> hist;
    for (int w = 0; w < g422.order(); ++w) {
        int c = g422.codim(w);
        CHECK(c == float_codim(g422.element(w), 4));
        ++hist[c];
    }
    CHECK(hist == std::map<int, int>{{0, 1}, {1, 6}, {2, 9}});

    // float-rank cross-check on a bigger group too
    GmpnGroup g313(3, 1, 3);
    for (int w = 0; w < g313.order(); ++w)
        CHECK(g313.codim(w) == float_codim(g313.element(w), 3));
}

TEST_CASE("length dominates codim; equality for p=1 and small type D") {
    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {1, 1, 4}, {4, 1, 2}, {3, 1, 3}, {6, 1, 2}}) {
        GmpnGroup g(m, p, n);
        for (int w = 0; w < g.order(); ++w) CHECK(g.reflection_length(w) == g.codim(w));
    }
    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {2, 2, 4}}) {
        GmpnGroup g(m, p, n);  // Coxeter type D
        for (int w = 0; w < g.order(); ++w) CHECK(g.reflection_length(w) == g.codim(w));
    }
    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{4, 2, 2}, {10, 5, 2}, {3, 3, 3}}) {
        GmpnGroup g(m, p, n);
        for (int w = 0; w < g.order(); ++w) CHECK(g.reflection_length(w) >= g.codim(w));
    }
}

TEST_CASE("reflection length is subadditive on small groups") {
    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {1, 1, 3}, {4, 2, 2}, {2, 2, 3}, {3, 1, 2}, {6, 6, 2}, {1, 1, 4}, {10, 5, 2}}) {
        GmpnGroup g(m, p, n);
        REQUIRE(g.order() <= 200);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                CHECK(g.reflection_length(g.multiply(u, v)) <=
                      g.reflection_length(u) + g.reflection_length(v));
    }
}

TEST_CASE("conjugacy orbits") {
    GmpnGroup s3(1, 1, 3);
    auto one = s3.conjugacy_orbits({s3.identity_index()});
    CHECK(one.size() == 1);
    CHECK(one[0] == std::vector<int>{s3.identity_index()});

    auto refl_orbit = s3.conjugacy_orbits(s3.reflections());
    CHECK(refl_orbit.size() == 1);
    CHECK(refl_orbit[0].size() == 3);

    GmpnGroup g212(2, 1, 2);
    std::vector<int> all(g212.order());
    for (int i = 0; i < g212.order(); ++i) all[i] = i;
    auto orbits = g212.conjugacy_orbits(all);
    CHECK(orbits.size() == 5);

    // brute-force oracle: conjugate by every group element
    std::set<std::set<int>> expected;
    for (int w = 0; w < g212.order(); ++w) {
        std::set<int> orb;
        for (int u = 0; u < g212.order(); ++u)
            orb.insert(g212.multiply(g212.multiply(u, w), g212.inverse(u)));
        expected.insert(orb);
    }
    std::set<std::set<int>> got;
    for (const auto& o : orbits) got.insert(std::set<int>(o.begin(), o.end()));
    CHECK(got == expected);
    for (const auto& o : orbits) CHECK(g212.order() % long(o.size()) == 0);

    CHECK_THROWS_AS(s3.conjugacy_orbits({s3.reflections()[0]}), DomainError);
}

TEST_CASE("the reflection set is closed under conjugation") {
    for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {4, 2, 2}, {10, 5, 2},
                                                                 {2, 2, 3}, {3, 3, 3}}) {
        GmpnGroup g(m, p, n);
        CHECK_NOTHROW(g.conjugacy_orbits(g.reflections()));
    }
}

TEST_CASE("element text format") {
    GmpnElement w = parse_element("[1,0|2,1]", 2);
    CHECK(format_element(w) == "[1,0|2,1]");
    CHECK(parse_element("[-1,5|2,1]", 4).a == std::vector<int>{3, 1});
    CHECK_THROWS_AS(parse_element("[1,0|2,2]", 2), ParameterError);
    CHECK_THROWS_AS(parse_element("[1,0|2]", 2), ParameterError);
    CHECK_THROWS_AS(parse_element("1,0|2,1", 2), ParameterError);
    GmpnGroup g422(4, 2, 2);
    CHECK_THROWS_AS(g422.index_of(parse_element("[1,0|1,2]", 4)), DomainError);  // sum not divisible
}

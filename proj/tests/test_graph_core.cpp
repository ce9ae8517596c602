#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>

#include "oor/circular_order.hpp"
#include "oor/decompositions.hpp"
#include "oor/generators.hpp"
#include "oor/graph.hpp"
#include "oor/graph6.hpp"

using namespace oor;

namespace {

// Reference graph6 encoder written directly from the format description:
// build the bit string of the upper triangle column by column, pad to a
// multiple of six, emit each group plus 63.
std::string ref_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) out += static_cast<char>(63 + n);
    else {
        out += '~';
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    }
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
    while (bits.size() % 6) bits += '0';
    for (size_t k = 0; k < bits.size(); k += 6) out += static_cast<char>(63 + std::stoi(bits.substr(k, 6), nullptr, 2));
    return out;
}

// Girth by trying every cycle length with a DFS over simple paths.
int girth_oracle(const Graph& g) {
    const int n = g.order();
    for (int len = 3; len <= n; ++len) {
        for (int s = 0; s < n; ++s) {
            std::vector<char> used(n, 0);
            std::function<bool(int, int)> go = [&](int v, int depth) {
                if (depth == len) return g.adjacent(v, s);
                for (int w : g.neighbors(v))
                    if (!used[w] && w > s) {
                        used[w] = 1;
                        if (go(w, depth + 1)) return true;
                        used[w] = 0;
                    }
                return false;
            };
            used[s] = 1;
            if (go(s, 1)) return len;
        }
    }
    return 0;
}

// 2-tree check by repeated removal of a degree-2 vertex with adjacent neighbours.
bool two_tree_oracle(Graph g) {
    int alive = g.order();
    std::vector<char> gone(g.order(), 0);
    while (alive > 2) {
        bool removed = false;
        for (int v = 0; v < g.order() && !removed; ++v) {
            if (gone[v] || g.degree(v) != 2) continue;
            auto nb = g.neighbors(v);
            if (!g.adjacent(nb[0], nb[1])) continue;
            g.remove_edge(v, nb[0]);
            g.remove_edge(v, nb[1]);
            gone[v] = 1;
            --alive;
            removed = true;
        }
        if (!removed) return false;
    }
    return g.size() == 1;
}

int components_without(const Graph& g, Vertex skip) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != skip) keep.push_back(v);
    return static_cast<int>(connected_components(induced_subgraph(g, keep)).size());
}

bool three_edge_colourable(const Graph& g) {
    const auto edges = g.edges();
    std::vector<int> colour(edges.size(), -1);
    std::function<bool(size_t)> go = [&](size_t i) {
        if (i == edges.size()) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j)
                if (colour[j] == c && (edges[j].first == edges[i].first || edges[j].first == edges[i].second ||
                                       edges[j].second == edges[i].first || edges[j].second == edges[i].second))
                    ok = false;
            if (!ok) continue;
            colour[i] = c;
            if (go(i + 1)) return true;
        }
        colour[i] = -1;
        return false;
    };
    return go(0);
}

Graph random_tree(int n, Rng& rng) {
    Graph t(n);
    for (int v = 1; v < n; ++v) t.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    return t;
}

bool leaves_removed_is_path(const Graph& t) {
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) >= 2) inner.push_back(v);
    const Graph h = induced_subgraph(t, inner);
    for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) > 2) return false;
    return true;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK_THROWS(g.add_edge(2, 2));
    CHECK(g.size() == 1);
    CHECK(g.non_edges().size() == 5);
    CHECK_THROWS_AS(g.adjacent(0, 9), std::out_of_range);
}

TEST_CASE("graph6 fixed cases") {
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@").order() == 1);
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
    CHECK(parse_graph6("D??").size() == 0);
    CHECK_THROWS_AS(parse_graph6("D?\x7f"), InputError);
    CHECK_THROWS_AS(parse_graph6("D?"), InputError);
    CHECK_THROWS_AS(parse_graph6("D???"), InputError);
    CHECK_THROWS_AS(parse_graph6("Bx"), InputError);  // padding bit set
    CHECK_THROWS_WITH_AS(parse_graph6("D? ?"), doctest::Contains("byte 2"), InputError);
    const Graph e = parse_graph6("E?~o");
    CHECK(e.order() == 6);
    CHECK(write_graph6(e) == "E?~o");
    CHECK(ref_graph6(e) == "E?~o");
}

TEST_CASE("graph6 round trip against reference encoder") {
    std::ifstream in(OOR_TEST_DATA "/all6.g6");
    REQUIRE(in);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        const Graph g = parse_graph6(line);
        CHECK(write_graph6(g) == line);
        CHECK(ref_graph6(g) == line);
        ++count;
    }
    CHECK(count == 156);
    Rng rng(7);
    for (int n : {63, 64, 100}) {
        const Graph g = random_graph(n, 0.3, rng);
        CHECK(write_graph6(g) == ref_graph6(g));
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("complement") {
    Rng rng(1);
    const Graph g = random_graph(7, 0.5, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(complete_graph(5)).size() == 0);
    CHECK(isomorphic_bruteforce(complement(cycle_graph(5)), cycle_graph(5)));
    CHECK_FALSE(isomorphic_bruteforce(complement(cycle_graph(6)), cycle_graph(6)));
}

TEST_CASE("named graphs") {
    const Graph w = named_graph("wheel:6");
    CHECK(w.order() == 6);
    CHECK(w.size() == 10);
    int hubs = 0;
    for (Vertex v = 0; v < 6; ++v) hubs += w.degree(v) == 5;
    CHECK(hubs == 1);

    const Graph p = named_graph("gp:5,2");
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(girth_oracle(p) == 5);
    CHECK(girth(p) == 5);
    CHECK(p == petersen_graph());

    CHECK(isomorphic_bruteforce(named_graph("grid:2,2"), cycle_graph(4)));
    CHECK(named_graph("grid:5,3").label(7) == "(2,1)");
    const Graph gnk = named_graph("gnk:8,4");
    CHECK(gnk.size() == 28 - 4);
    CHECK(gnk.label(3) == "v4");
    CHECK_FALSE(gnk.adjacent(3, 0));

    CHECK(named_graph("dodecahedron").size() == 30);
    CHECK(girth(named_graph("dodecahedron")) == 5);
    const Graph pappus = pappus_graph();
    CHECK(pappus.size() == 27);
    CHECK(girth_oracle(pappus) == 6);

    for (int variant : {1, 2}) {
        const Graph b = blanusa_snark(variant);
        CHECK(b.order() == 18);
        CHECK(b.size() == 27);
        for (Vertex v = 0; v < 18; ++v) CHECK(b.degree(v) == 3);
        CHECK(is_connected(b));
        CHECK(girth_oracle(b) == 5);
        CHECK_FALSE(three_edge_colourable(b));
    }
    CHECK(three_edge_colourable(dodecahedron_graph()));
    CHECK_FALSE(three_edge_colourable(petersen_graph()));

    CHECK_THROWS_AS(named_graph("wheel:3"), InputError);
    CHECK_THROWS_AS(named_graph("nosuch"), InputError);
    CHECK_THROWS_AS(named_graph("gp:5"), InputError);
    CHECK_THROWS_AS(named_graph("gnk:5,2"), InputError);
    CHECK_THROWS_AS(named_graph("cycle:x"), InputError);
}

TEST_CASE("circular order intervals") {
    const CircularOrder o({3, 1, 4, 0, 2});
    CHECK(o.successor(2) == 3);
    CHECK(o.closed_interval(4, 1) == std::vector<Vertex>{4, 0, 2, 3, 1});
    CHECK(o.open_interval(0, 1) == std::vector<Vertex>{2, 3});
    CHECK(o.half_open_interval(2, 4) == std::vector<Vertex>{2, 3, 1});
    CHECK(o.is_contiguous({2, 3}));
    CHECK_FALSE(o.is_contiguous({3, 4}));
    CHECK(o.same_cycle(CircularOrder({0, 2, 3, 1, 4})));
    CHECK_THROWS_AS(CircularOrder({0, 0, 1}), InputError);
}

TEST_CASE("two_tree_plan") {
    const auto k3 = two_tree_plan(complete_graph(3));
    CHECK(k3.events.size() == 1);
    CHECK(k3.fill.empty());

    const Graph p4 = path_graph(4);
    const auto plan = two_tree_plan(p4);
    CHECK(plan.fill.size() == 2);
    const Graph full = plan.replay();
    CHECK(two_tree_oracle(full));
    for (auto [u, v] : p4.edges()) CHECK(full.adjacent(u, v));
    CHECK(full.size() == p4.size() + 2);

    CHECK_THROWS_AS(two_tree_plan(complete_graph(4)), DomainError);
    CHECK_THROWS_AS(two_tree_plan(petersen_graph()), DomainError);

    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 30)(rng);
        const Graph g = trial % 2 ? random_two_tree(n, rng) : random_partial_two_tree(n, 0.4, rng);
        const auto pl = two_tree_plan(g);
        const Graph r = pl.replay();
        CHECK(two_tree_oracle(r));
        CHECK(is_two_tree(r));
        std::set<Edge> extra;
        for (auto [u, v] : r.edges())
            if (!g.adjacent(u, v)) extra.insert({u, v});
        for (auto [u, v] : g.edges()) CHECK(r.adjacent(u, v));
        CHECK(extra == std::set<Edge>(pl.fill.begin(), pl.fill.end()));
        if (trial % 2) CHECK(pl.fill.empty());
    }
}

TEST_CASE("block_cut_tree") {
    const auto tri = block_cut_tree(cycle_graph(3));
    CHECK(tri.blocks.size() == 1);
    CHECK(tri.cut_vertices.empty());
    CHECK(tri.blocks[0].is_cycle);

    Graph bow(5);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}) bow.add_edge(u, v);
    const auto bd = block_cut_tree(bow);
    CHECK(bd.blocks.size() == 2);
    std::vector<Vertex> articulation;
    for (Vertex v = 0; v < 5; ++v)
        if (components_without(bow, v) > 1) articulation.push_back(v);
    CHECK(bd.cut_vertices == articulation);

    // Three cycles joined by bridges plus a pendant bridge.
    Graph cac(12);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3},
                                          {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 7}, {0, 11}})
        cac.add_edge(u, v);
    const auto cd = block_cut_tree(cac);
    CHECK(cd.blocks.size() == 3 + 3);
    CHECK(cd.is_cactus());
    int total = 0;
    for (const auto& b : cd.blocks) total += static_cast<int>(b.vertices.size()) - 1;
    CHECK(total == 11);
    CHECK(cd.blocks[0].anchor == 0);
    for (size_t i = 1; i < cd.blocks.size(); ++i) {
        const auto& b = cd.blocks[i];
        REQUIRE(b.parent >= 0);
        CHECK(b.parent < static_cast<int>(i));
        const auto& pv = cd.blocks[b.parent].vertices;
        CHECK(std::find(pv.begin(), pv.end(), b.anchor) != pv.end());
        CHECK(b.vertices.front() == b.anchor);
    }

    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 30)(rng);
        const Graph g = random_cactus(n, rng);
        const auto d = block_cut_tree(g);
        CHECK(d.is_cactus());
        int sum = 0;
        for (const auto& b : d.blocks) {
            sum += static_cast<int>(b.vertices.size()) - 1;
            if (b.is_cycle)
                for (size_t i = 0; i < b.vertices.size(); ++i)
                    CHECK(g.adjacent(b.vertices[i], b.vertices[(i + 1) % b.vertices.size()]));
        }
        CHECK(sum == n - 1);
    }
    CHECK_FALSE(block_cut_tree(complete_graph(4)).is_cactus());
}

TEST_CASE("caterpillar_spine") {
    const auto star = caterpillar_spine(star_graph(5));
    REQUIRE(star);
    CHECK(star->size() == 3);
    CHECK((*star)[1] == 0);
    CHECK_FALSE(caterpillar_spine(spider_y()));
    const auto path = caterpillar_spine(path_graph(6));
    REQUIRE(path);
    CHECK((*path == std::vector<Vertex>{0, 1, 2, 3, 4, 5} || *path == std::vector<Vertex>{5, 4, 3, 2, 1, 0}));
    CHECK_THROWS_AS(caterpillar_spine(cycle_graph(4)), InputError);

    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        const Graph t = random_tree(n, rng);
        const auto spine = caterpillar_spine(t);
        CHECK(spine.has_value() == leaves_removed_is_path(t));
        if (!spine) continue;
        std::set<Vertex> on(spine->begin(), spine->end());
        for (size_t i = 0; i + 1 < spine->size(); ++i) CHECK(t.adjacent((*spine)[i], (*spine)[i + 1]));
        CHECK(t.degree(spine->front()) == 1);
        CHECK(t.degree(spine->back()) == 1);
        for (Vertex v = 0; v < n; ++v) {
            bool near = on.count(v) > 0;
            for (Vertex w : t.neighbors(v)) near = near || on.count(w);
            CHECK(near);
        }
    }
}

namespace {

void check_outerpath(const Graph& g, const OuterpathStructure& s) {
    const int n = g.order();
    CHECK(static_cast<int>(s.triangles.size()) == n - 2);
    const Graph full = s.completed(n);
    for (auto [u, v] : g.edges()) CHECK(full.adjacent(u, v));
    CHECK(full.size() == 2 * n - 3);
    // Weak dual: triangles sharing two vertices.
    std::vector<int> deg(s.triangles.size(), 0);
    for (size_t i = 0; i < s.triangles.size(); ++i)
        for (size_t j = i + 1; j < s.triangles.size(); ++j) {
            int shared = 0;
            for (Vertex a : s.triangles[i])
                for (Vertex b : s.triangles[j]) shared += a == b;
            if (shared == 2) ++deg[i], ++deg[j];
            if (shared == 2) CHECK(j == i + 1);
        }
    if (n >= 4) {
        CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
        CHECK(*std::max_element(deg.begin(), deg.end()) <= 2);
    }
    std::vector<Vertex> seq = s.sequence;
    std::sort(seq.begin(), seq.end());
    for (int i = 0; i < n; ++i) CHECK(seq[i] == i);
    for (int i = 2; i + 1 < n; ++i) {
        const auto [a, b] = s.attachment[i];
        CHECK((a == s.sequence[i] || b == s.sequence[i]));
        CHECK(full.adjacent(a, b));
    }
}

}  // namespace

TEST_CASE("validate_outerpath") {
    const Graph c4 = cycle_graph(4);
    const auto s = validate_outerpath(c4, CircularOrder({0, 1, 2, 3}));
    CHECK(s.added.size() == 1);
    CHECK(s.triangles.size() == 2);
    check_outerpath(c4, s);

    const Graph f5 = fan_graph(5);
    const auto fs = validate_outerpath(f5, CircularOrder({0, 1, 2, 3, 4}));
    CHECK(fs.added.empty());
    check_outerpath(f5, fs);

    CHECK_THROWS_AS(validate_outerpath(complete_graph(4), CircularOrder({0, 1, 2, 3})), DomainError);
    // Triangle with three ears: weak dual is a star.
    Graph star3(6);
    for (int i = 0; i < 6; ++i) star3.add_edge(i, (i + 1) % 6);
    star3.add_edge(0, 2), star3.add_edge(2, 4), star3.add_edge(4, 0);
    CHECK_THROWS_AS(validate_outerpath(star3, CircularOrder({0, 1, 2, 3, 4, 5})), DomainError);

    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 14)(rng);
        Graph g = random_maximal_outerpath(n, rng);
        std::vector<Vertex> ord(n);
        std::iota(ord.begin(), ord.end(), 0);
        const auto st = validate_outerpath(g, CircularOrder(ord));
        CHECK(st.added.empty());
        check_outerpath(g, st);
        // Dropping edges keeps a path triangulation available.
        auto edges = g.edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        for (size_t k = 0; k < edges.size() / 3; ++k) g.remove_edge(edges[k].first, edges[k].second);
        check_outerpath(g, validate_outerpath(g, CircularOrder(ord)));
    }
}

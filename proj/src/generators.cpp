#include "oor/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

namespace oor {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

}  // namespace

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph wheel_graph(int n) {
    require(n >= 4, "wheel needs n >= 4");
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % (n - 1) + 1);
    }
    return g;
}

Graph fan_graph(int n) {
    require(n >= 3, "fan needs n >= 3");
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        g.add_edge(0, i);
        if (i + 1 < n) g.add_edge(i, i + 1);
    }
    return g;
}

Graph generalized_petersen(int n, int k) {
    require(n >= 3 && k >= 1 && 2 * k < n, "generalized Petersen needs n >= 3 and 1 <= k < n/2");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
}

Graph petersen_graph() { return generalized_petersen(5, 2); }

Graph dodecahedron_graph() { return generalized_petersen(10, 2); }

Graph lcf_graph(int n, const std::vector<int>& shifts) {
    require(n >= 4 && !shifts.empty(), "bad LCF code");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        const int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
        require(j != i, "LCF shift maps a vertex to itself");
        g.add_edge(i, j);
    }
    for (int v = 0; v < n; ++v) require(g.degree(v) == 3, "LCF code does not give a cubic graph");
    return g;
}

Graph pappus_graph() { return lcf_graph(18, {5, 7, -7, 7, -7, -5}); }

Graph blanusa_snark(int variant) {
    require(variant == 1 || variant == 2, "blanusa variant must be 1 or 2");
    // Dot product of two Petersen graphs. In the first copy remove the edge
    // 0-1 and a second edge that is at distance 1 (variant 1) or 2 (variant 2)
    // from it; in the second copy remove the adjacent vertices 0 and 1.
    const Graph p = petersen_graph();
    Graph g(18);
    const Edge ab{0, 1};
    const Edge cd = variant == 1 ? Edge{2, 7} : Edge{3, 8};
    for (auto [u, v] : p.edges())
        if (Edge{u, v} != ab && Edge{u, v} != cd) g.add_edge(u, v);
    // Second copy: vertices 2..9 map to 10..17.
    auto h = [](Vertex v) { return v + 8; };
    for (auto [u, v] : p.edges())
        if (u > 1 && v > 1) g.add_edge(h(u), h(v));
    // x=0 had neighbours 4,5; y=1 had neighbours 2,6.
    g.add_edge(ab.first, h(4));
    g.add_edge(ab.second, h(5));
    g.add_edge(cd.first, h(2));
    g.add_edge(cd.second, h(6));
    return g;
}

Graph spider_y() {
    Graph g(7);
    for (int leg = 0; leg < 3; ++leg) {
        g.add_edge(0, 1 + 2 * leg);
        g.add_edge(1 + 2 * leg, 2 + 2 * leg);
    }
    return g;
}

Graph grid_graph(int k, int l) {
    require(k >= 2 && l >= 2, "grid needs k, l >= 2");
    Graph g(k * l);
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < k; ++i) {
            const Vertex v = j * k + i;
            g.set_label(v, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (i + 1 < k) g.add_edge(v, v + 1);
            if (j + 1 < l) g.add_edge(v, v + k);
        }
    return g;
}

Graph kn_minus_ck(int n, int k) {
    require(k >= 3 && k <= n, "G(n,k) needs 3 <= k <= n");
    Graph g = complete_graph(n);
    for (int i = 0; i < k; ++i) {
        g.remove_edge(i, (i + 1) % k);
        g.set_label(i, "v" + std::to_string(i + 1));
    }
    return g;
}

Graph hypercube_graph(int dim) {
    require(dim >= 1 && dim <= 6, "hypercube dimension must be in 1..6");
    const int n = 1 << dim;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    return g;
}

Graph complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete bipartite needs a, b >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

namespace {

std::vector<int> parse_params(std::string_view text) {
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto tok = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw InputError("bad parameter '" + std::string(tok) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

using Builder = std::function<Graph(const std::vector<int>&)>;

const std::map<std::string, std::pair<int, Builder>, std::less<>>& families() {
    static const std::map<std::string, std::pair<int, Builder>, std::less<>> table = {
        {"complete", {1, [](auto& p) { return complete_graph(p[0]); }}},
        {"cycle", {1, [](auto& p) { return cycle_graph(p[0]); }}},
        {"path", {1, [](auto& p) { return path_graph(p[0]); }}},
        {"star", {1, [](auto& p) { return star_graph(p[0]); }}},
        {"wheel", {1, [](auto& p) { return wheel_graph(p[0]); }}},
        {"fan", {1, [](auto& p) { return fan_graph(p[0]); }}},
        {"gp", {2, [](auto& p) { return generalized_petersen(p[0], p[1]); }}},
        {"grid", {2, [](auto& p) { return grid_graph(p[0], p[1]); }}},
        {"gnk", {2, [](auto& p) { return kn_minus_ck(p[0], p[1]); }}},
        {"hypercube", {1, [](auto& p) { return hypercube_graph(p[0]); }}},
        {"kmn", {2, [](auto& p) { return complete_bipartite(p[0], p[1]); }}},
        {"petersen", {0, [](auto&) { return petersen_graph(); }}},
        {"dodecahedron", {0, [](auto&) { return dodecahedron_graph(); }}},
        {"pappus", {0, [](auto&) { return pappus_graph(); }}},
        {"blanusa1", {0, [](auto&) { return blanusa_snark(1); }}},
        {"blanusa2", {0, [](auto&) { return blanusa_snark(2); }}},
        {"spider-y", {0, [](auto&) { return spider_y(); }}},
        {"cube", {0, [](auto&) { return hypercube_graph(3); }}},
        {"w6", {0, [](auto&) { return wheel_graph(6); }}},
    };
    return table;
}

}  // namespace

Graph named_graph(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto family = spec.substr(0, colon);
    const auto params = colon == std::string_view::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1));
    const auto& table = families();
    auto it = table.find(family);
    if (it == table.end()) throw InputError("unknown graph family '" + std::string(family) + "'");
    if (static_cast<int>(params.size()) != it->second.first)
        throw InputError("family '" + std::string(family) + "' expects " + std::to_string(it->second.first) +
                         " parameter(s)");
    return it->second.second(params);
}

std::vector<std::string> parameterless_families() {
    std::vector<std::string> out;
    for (const auto& [name, entry] : families())
        if (entry.first == 0) out.push_back(name);
    return out;
}

Graph random_two_tree(int n, Rng& rng) {
    require(n >= 2, "2-tree needs n >= 2");
    Graph g(n);
    g.add_edge(0, 1);
    std::vector<Edge> edges{{0, 1}};
    for (Vertex x = 2; x < n; ++x) {
        const Edge e = edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
        g.add_edge(x, e.first);
        g.add_edge(x, e.second);
        edges.emplace_back(e.first, x);
        edges.emplace_back(e.second, x);
    }
    return g;
}

Graph random_partial_two_tree(int n, double drop, Rng& rng) {
    Graph g = random_two_tree(n, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::bernoulli_distribution coin(drop);
    for (auto [u, v] : edges) {
        if (!coin(rng)) continue;
        g.remove_edge(u, v);
        if (!is_connected(g)) g.add_edge(u, v);
    }
    return g;
}

Graph random_cactus(int n, Rng& rng) {
    require(n >= 1, "cactus needs n >= 1");
    std::vector<Edge> edges;
    int count = 1;
    while (count < n) {
        const Vertex at = std::uniform_int_distribution<int>(0, count - 1)(rng);
        const int room = n - count;
        const bool cycle = room >= 2 && std::bernoulli_distribution(0.6)(rng);
        if (!cycle) {
            edges.emplace_back(at, count++);
            continue;
        }
        const int len = std::uniform_int_distribution<int>(3, std::min(7, room + 1))(rng);
        Vertex prev = at;
        for (int i = 1; i < len; ++i) {
            edges.emplace_back(prev, count);
            prev = count++;
        }
        edges.emplace_back(prev, at);
    }
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph random_caterpillar(int n, Rng& rng) {
    require(n >= 2, "caterpillar needs n >= 2");
    const int spine = std::uniform_int_distribution<int>(1, n - 1)(rng);
    Graph g(n);
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    for (Vertex v = spine; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, spine - 1)(rng));
    return g;
}

Graph random_maximal_outerpath(int n, Rng& rng) {
    require(n >= 3, "outerpath needs n >= 3");
    Graph g = cycle_graph(n);
    // Strip triangulation: the current chord (lo, hi) advances one endpoint at
    // a time, so consecutive triangles share a chord and the dual is a path.
    int lo = 0, hi = n - 1;
    std::bernoulli_distribution coin(0.5);
    while (hi - lo > 1) {
        if (coin(rng)) ++lo;
        else --hi;
        g.add_edge(lo, hi);
    }
    return g;
}

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace oor

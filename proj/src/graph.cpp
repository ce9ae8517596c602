#include "oor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace oor {

bool Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto& a = adj_[idx(u, v)];
    if (a) return false;
    a = 1;
    adj_[idx(v, u)] = 1;
    ++m_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    if (u == v) return false;
    auto& a = adj_[idx(u, v)];
    if (!a) return false;
    a = 0;
    adj_[idx(v, u)] = 0;
    --m_;
    return true;
}

int Graph::degree(Vertex v) const {
    int d = 0;
    for (Vertex u = 0; u < n_; ++u) d += adj_[idx(v, u)];
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) out.push_back(u);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adj_[idx(u, v)]) out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adj_[idx(u, v)]) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw std::length_error("bitmask adjacency requires n <= 64");
    std::vector<std::uint64_t> rows(n_, 0);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (adj_[idx(u, v)]) rows[u] |= std::uint64_t{1} << v;
    return rows;
}

std::optional<std::string> Graph::label(Vertex v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

Graph complement(const Graph& g) {
    Graph h(g.order());
    for (auto [u, v] : g.non_edges()) h.add_edge(u, v);
    for (const auto& [v, text] : g.labels()) h.set_label(v, text);
    return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
    Graph h(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        if (auto l = g.label(keep[i])) h.set_label(static_cast<Vertex>(i), *l);
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return h;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            out.back().push_back(u);
            for (Vertex w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    q.push(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1; }

bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    const int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (da[u] != db[perm[u]]) ok = false;
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

int girth(const Graph& g) {
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    for (const auto& [v, text] : g.labels()) h.set_label(perm[v], text);
    return h;
}

}  // namespace oor

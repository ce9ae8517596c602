#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oor {

/// Raised for malformed input (graph6 text, JSON documents, bad parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a precondition of an algorithm does not hold for a valid input
/// (e.g. asking for a stacking plan of a graph with treewidth 3).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Undirected simple graph on the dense vertex set 0..n-1.
///
/// Adjacency is stored as a symmetric boolean matrix; the graphs handled here
/// are small (tens of vertices), so O(1) adjacency queries matter more than
/// memory.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }

    /// Adds uv; returns false if it was already present.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Edges as (u,v) with u<v in lexicographic order.
    std::vector<Edge> edges() const;
    std::vector<Edge> non_edges() const;

    /// Bitmask adjacency rows (requires n <= 64).
    std::vector<std::uint64_t> adjacency_masks() const;

    const std::map<Vertex, std::string>& labels() const { return labels_; }
    void set_label(Vertex v, std::string text) { labels_[v] = std::move(text); }
    std::optional<std::string> label(Vertex v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    size_t idx(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex id out of range");
        return static_cast<size_t>(u) * n_ + v;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::map<Vertex, std::string> labels_;
};

Graph complement(const Graph& g);

/// Subgraph induced by keeping `keep` (in the given order); vertex i of the
/// result is keep[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_tree(const Graph& g);

/// Brute-force isomorphism test; intended for graphs with at most 8 vertices.
bool isomorphic_bruteforce(const Graph& a, const Graph& b);

/// Girth by BFS from every vertex; 0 for forests.
int girth(const Graph& g);

/// Relabels vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace oor

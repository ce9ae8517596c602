#pragma once

#include <array>
#include <optional>
#include <vector>

#include "oor/circular_order.hpp"
#include "oor/graph.hpp"

namespace oor {

struct StackEvent {
    Vertex vertex;
    Edge parent;  // stored as make_edge(a, b)
};

/// A 2-tree built from `base` by replaying `events`; `fill` lists the edges
/// of that 2-tree that are absent from the input graph.
struct StackingPlan {
    int n = 0;
    Edge base{0, 1};
    std::vector<StackEvent> events;
    std::vector<Edge> fill;

    /// Replays the events into the 2-tree. Throws InputError if a parent edge
    /// is missing when its event fires or a vertex is stacked twice.
    Graph replay() const;
};

/// Elimination of degree <= 2 vertices. Throws DomainError if g is not a
/// partial 2-tree, InputError if g is disconnected or has fewer than 2 vertices.
StackingPlan two_tree_plan(const Graph& g);

/// Repeatedly removes degree-2 vertices whose neighbours are adjacent.
bool is_two_tree(const Graph& g);

struct Block {
    /// For cycle blocks: the cycle in traversal order starting at the anchor.
    /// For bridges: {anchor, other}. Other blocks: anchor first, rest sorted.
    std::vector<Vertex> vertices;
    bool is_cycle = false;
    bool is_bridge = false;
    Vertex anchor = -1;
    int parent = -1;  // parent block in the BFS tree, -1 for roots
    int component = 0;
};

struct BlockDecomposition {
    /// Blocks in BFS order (roots of later components follow earlier ones).
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;
    /// Block-cut tree edges as (block index, cut vertex).
    std::vector<std::pair<int, Vertex>> tree_edges;

    /// Every block is a bridge or a cycle (isolated vertices allowed).
    bool is_cactus() const;
};

/// Biconnected blocks with BFS numbering. Per component the root is the block
/// with the smallest vertex list; its anchor is its smallest vertex.
/// Isolated vertices become single-vertex blocks.
BlockDecomposition block_cut_tree(const Graph& g);

/// Spine p1..pr whose endpoints are leaves of t (for n >= 2), or nullopt if t
/// is not a caterpillar. Throws InputError if t is not a tree.
std::optional<std::vector<Vertex>> caterpillar_spine(const Graph& t);

struct OuterpathStructure {
    CircularOrder boundary;
    /// Edges of g that are not boundary edges of `boundary`.
    std::vector<Edge> chords;
    /// Edges added to make the drawing a maximal outerpath (missing boundary
    /// edges and triangulating chords).
    std::vector<Edge> added;
    /// Triangles t1..t_{n-2} along the weak dual path.
    std::vector<std::array<Vertex, 3>> triangles;
    /// v1..vn.
    std::vector<Vertex> sequence;
    /// attachment[i] is the internal edge e_{i+1} = v_{i+1} v_j for
    /// 2 <= i < n-1 (0-based); other entries are (-1,-1).
    std::vector<Edge> attachment;

    /// The maximal outerpath (g plus `added`).
    Graph completed(int n) const;
};

/// Throws DomainError for crossing chords or when no triangulation has a
/// path as weak dual.
OuterpathStructure validate_outerpath(const Graph& g, const CircularOrder& hamiltonian);

}  // namespace oor

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oor/arc.hpp"
#include "oor/circular_order.hpp"
#include "oor/decompositions.hpp"
#include "oor/graph.hpp"
#include "oor/placement.hpp"

namespace oor {

/// Arc attached to a stacked vertex: centred at the vertex, ends on the two
/// parent edges, running over the top. The wedge between the parent edges is
/// excluded.
struct VertexArc {
    Vertex vertex = -1;
    Vertex left_parent = -1, right_parent = -1;
    ReflexArc arc;
    bool active = false;
};

struct ConstructionStep {
    /// Vertex whose parent edges received the new group; -1 for the base step.
    Vertex expanded = -1;
    std::vector<Vertex> added;
    /// Height of the common line of the new group.
    Rat line_height;
    /// Offset of the group from the extended parent edge after shrinking.
    Rat offset;
    int halvings = 0;
    std::vector<Vertex> present;
    /// Indexed by vertex; meaningful for `present` only.
    std::vector<RatPoint> coords;
    std::vector<VertexArc> arcs;
};

struct ConstructionTrace {
    std::vector<ConstructionStep> steps;
};

/// Reducible representation of the 2-tree replayed by `plan`, with every
/// vertex on the outer face. Fill edges are deleted afterwards, so partial
/// 2-trees are handled too. The result is verified; std::logic_error if the
/// verifier rejects it. Throws InputError for an invalid plan.
std::pair<Placement, ConstructionTrace> construct_two_tree(const StackingPlan& plan);

/// Violations of the stacking invariants at one step of the trace, as
/// readable messages; empty when all hold. `two_tree` is the replayed graph.
std::vector<std::string> two_tree_invariant_violations(const Graph& two_tree, const ConstructionStep& step);

/// Block-by-block zig-zag order for cacti and cactus forests. Throws
/// DomainError for other graphs.
CircularOrder construct_cactus_order(const Graph& g, const BlockDecomposition& bd);

/// Zig-zag order of each path copy, copies one after the other. Vertex
/// j*k + i is the i-th vertex of copy j. Throws InputError unless k, l >= 2.
CircularOrder construct_grid_order(int k, int l);

/// Inserts each vertex of the outerpath sequence next to its attachment.
CircularOrder construct_outerpath_order(const OuterpathStructure& op);

/// Spine with each internal spine vertex followed by its leaves. Throws
/// DomainError if t is not a caterpillar.
CircularOrder construct_caterpillar_complement_order(const Graph& t);

struct KnMinusCkOrder {
    CircularOrder order;
    /// Vertex cover used for the consecutive-neighbours certificate.
    std::vector<Vertex> cover;
};

/// Order for the complete graph minus the cycle on vertices 0..k-1. Throws
/// DomainError unless k is 3, 4 or n.
KnMinusCkOrder construct_kn_minus_ck_order(int n, int k);

/// Returns `certificate` once it has the consecutive-neighbours property
/// with every non-edge endpoint as cover. Throws DomainError naming the
/// offending vertex otherwise.
CircularOrder construct_cnp_order(const Graph& g, const CircularOrder& certificate);

}  // namespace oor

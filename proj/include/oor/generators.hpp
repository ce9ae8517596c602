#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "oor/graph.hpp"

namespace oor {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
/// Hub 0 joined to a cycle on 1..n-1; W_n has n vertices.
Graph wheel_graph(int n);
/// Apex 0 joined to a path on 1..n-1.
Graph fan_graph(int n);
/// Generalized Petersen graph G(n,k): outer cycle 0..n-1, spokes i -- n+i, inner i+n -- (i+k)%n+n.
Graph generalized_petersen(int n, int k);
Graph petersen_graph();
Graph dodecahedron_graph();
Graph pappus_graph();
/// The two Blanusa snarks (variant 1 or 2).
Graph blanusa_snark(int variant);
/// Root with three legs of length two.
Graph spider_y();
/// Cartesian product P_k x P_l; vertex (i,j) has id j*k+i, label "(i,j)".
Graph grid_graph(int k, int l);
/// K_n minus the edges of the cycle 0,1,...,k-1; cycle vertices labelled v1..vk.
Graph kn_minus_ck(int n, int k);
Graph hypercube_graph(int dim);
Graph complete_bipartite(int a, int b);
/// Graph from an LCF code (cubic Hamiltonian graph).
Graph lcf_graph(int n, const std::vector<int>& shifts);

/// Parses "family" or "family:p1,p2" (e.g. "wheel:6", "gp:11,2", "grid:5,3",
/// "gnk:8,4", "petersen"). Throws InputError for unknown families or
/// out-of-range parameters.
Graph named_graph(std::string_view spec);
/// Names understood by named_graph that take no parameters.
std::vector<std::string> parameterless_families();

using Rng = std::mt19937_64;

/// Random 2-tree on n >= 2 vertices (uniform choice of parent edge each step).
Graph random_two_tree(int n, Rng& rng);
/// Random 2-tree with each edge dropped independently with probability
/// `drop`, keeping the result connected.
Graph random_partial_two_tree(int n, double drop, Rng& rng);
/// Random cactus with about n vertices: repeatedly hangs a cycle or a bridge
/// off a random existing vertex.
Graph random_cactus(int n, Rng& rng);
/// Random tree whose non-leaves form a path.
Graph random_caterpillar(int n, Rng& rng);
/// Random maximal outerpath; vertices 0..n-1 in Hamiltonian (boundary) order.
Graph random_maximal_outerpath(int n, Rng& rng);
/// Erdos-Renyi G(n,p).
Graph random_graph(int n, double p, Rng& rng);

}  // namespace oor

#!/usr/bin/env python3
"""Generate the graph6 catalogs used by the acceptance suite.

  all6.g6        all 156 graphs on six vertices (networkx graph atlas)
  cubic4_12.g6   all connected cubic graphs on 4..12 vertices

The cubic catalog is produced by sampling random cubic graphs and keeping one
representative per isomorphism class until the known class counts
(1, 2, 5, 19, 85) are reached.
"""

import argparse
import collections
import random
import sys

import networkx as nx
import numpy as np

CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def invariant(g):
    # Cheap isomorphism invariant used to bucket candidates before VF2:
    # per-vertex closed-walk counts and the distance distribution.
    a = nx.to_numpy_array(g, dtype=np.int64)
    walks = []
    p = np.eye(len(a), dtype=np.int64)
    for _ in range(8):
        p = p @ a
        walks.append(np.diag(p).copy())
    per_vertex = sorted(tuple(int(w[v]) for w in walks) for v in range(len(a)))
    dist = collections.Counter()
    for _, lengths in nx.all_pairs_shortest_path_length(g):
        dist.update(lengths.values())
    return (tuple(per_vertex), tuple(sorted(dist.items())))


def cubic_classes(n, want, rng):
    buckets = collections.defaultdict(list)
    found = 0
    attempts = 0
    while found < want:
        attempts += 1
        g = nx.random_regular_graph(3, n, seed=rng.randrange(1 << 30))
        if not nx.is_connected(g):
            continue
        key = invariant(g)
        if any(nx.is_isomorphic(g, h) for h in buckets[key]):
            continue
        buckets[key].append(g)
        found += 1
    reps = [h for hs in buckets.values() for h in hs]
    reps.sort(key=lambda h: nx.to_graph6_bytes(h, header=False))
    return reps


def g6(g):
    h = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tests/data")
    ap.add_argument("--seed", type=int, default=20221016)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    six = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6]
    assert len(six) == 156
    with open(f"{args.out}/all6.g6", "w") as f:
        for g in six:
            f.write(g6(g) + "\n")

    with open(f"{args.out}/cubic4_12.g6", "w") as f:
        for n, want in CUBIC_COUNTS.items():
            reps = cubic_classes(n, want, rng)
            print(f"n={n}: {len(reps)} classes", file=sys.stderr)
            for g in reps:
                f.write(g6(g) + "\n")


if __name__ == "__main__":
    main()

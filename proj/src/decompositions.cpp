#include "oor/decompositions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace oor {

// ---------------------------------------------------------------- 2-trees

Graph StackingPlan::replay() const {
    Graph g(n);
    std::vector<char> placed(n, 0);
    if (base.first == base.second) throw InputError("plan base edge is a loop");
    g.add_edge(base.first, base.second);
    placed[base.first] = placed[base.second] = 1;
    for (const auto& ev : events) {
        const auto [a, b] = ev.parent;
        if (placed[ev.vertex]) throw InputError("plan stacks a vertex twice");
        if (!placed[a] || !placed[b] || !g.adjacent(a, b)) throw InputError("plan parent edge missing when its event fires");
        g.add_edge(ev.vertex, a);
        g.add_edge(ev.vertex, b);
        placed[ev.vertex] = 1;
    }
    if (std::count(placed.begin(), placed.end(), 1) != n) throw InputError("plan does not place every vertex");
    return g;
}

StackingPlan two_tree_plan(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw InputError("two_tree_plan needs at least 2 vertices");
    if (!is_connected(g)) throw InputError("two_tree_plan needs a connected graph");

    Graph work = g;
    std::vector<char> alive(n, 1);
    std::vector<StackEvent> elim;
    std::set<Edge> fill;
    auto live_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : work.neighbors(v))
            if (alive[w]) out.push_back(w);
        return out;
    };

    for (int remaining = n; remaining > 2; --remaining) {
        Vertex pick = -1;
        std::vector<Vertex> nb;
        for (Vertex v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            nb = live_neighbors(v);
            if (nb.size() <= 2) pick = v;
        }
        if (pick < 0) throw DomainError("not a partial 2-tree (treewidth > 2)");
        if (nb.size() == 1) {
            // Hang the leaf on an edge at its neighbour.
            const Vertex a = nb[0];
            const auto na = live_neighbors(a);
            Vertex b = -1;
            for (Vertex w : na)
                if (w != pick) {
                    b = w;
                    break;
                }
            nb.push_back(b);
            work.add_edge(pick, b);
            fill.insert(make_edge(pick, b));
        } else if (work.add_edge(nb[0], nb[1])) {
            fill.insert(make_edge(nb[0], nb[1]));
        }
        elim.push_back({pick, make_edge(nb[0], nb[1])});
        alive[pick] = 0;
    }

    StackingPlan plan;
    plan.n = n;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) rest.push_back(v);
    plan.base = make_edge(rest[0], rest[1]);
    plan.events.assign(elim.rbegin(), elim.rend());
    plan.fill.assign(fill.begin(), fill.end());
    return plan;
}

bool is_two_tree(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != 2 * n - 3 || !is_connected(g)) return false;
    Graph work = g;
    std::vector<char> alive(n, 1);
    for (int remaining = n; remaining > 2; --remaining) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            std::vector<Vertex> nb;
            for (Vertex w : work.neighbors(v))
                if (alive[w]) nb.push_back(w);
            if (nb.size() == 2 && work.adjacent(nb[0], nb[1])) pick = v;
        }
        if (pick < 0) return false;
        alive[pick] = 0;
    }
    return true;
}

// ------------------------------------------------------------ block-cut tree

namespace {

struct Biconnected {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;

    explicit Biconnected(const Graph& graph) : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

    void dfs(Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        for (Vertex w : g.neighbors(u)) {
            if (w == parent) continue;
            if (disc[w] < 0) {
                stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<Edge> block;
                    while (true) {
                        const Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == Edge{u, w}) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[u]) {
                stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    }
};

}  // namespace

bool BlockDecomposition::is_cactus() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const Block& b) { return b.is_cycle || b.is_bridge || b.vertices.size() == 1; });
}

BlockDecomposition block_cut_tree(const Graph& g) {
    const int n = g.order();
    Biconnected bc(g);
    for (Vertex v = 0; v < n; ++v)
        if (bc.disc[v] < 0) bc.dfs(v, -1);

    struct Raw {
        std::vector<Vertex> verts;
        std::vector<Edge> edges;
    };
    std::vector<Raw> raw;
    for (auto& edges : bc.blocks) {
        std::set<Vertex> vs;
        for (auto [a, b] : edges) vs.insert(a), vs.insert(b);
        raw.push_back({{vs.begin(), vs.end()}, edges});
    }
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0) raw.push_back({{v}, {}});
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.verts < b.verts; });

    std::vector<std::vector<int>> blocks_of(n);
    for (size_t i = 0; i < raw.size(); ++i)
        for (Vertex v : raw[i].verts) blocks_of[v].push_back(static_cast<int>(i));

    BlockDecomposition out;
    std::vector<int> new_index(raw.size(), -1);
    int component = 0;
    for (size_t root = 0; root < raw.size(); ++root) {
        if (new_index[root] >= 0) continue;
        std::queue<std::pair<int, Vertex>> q;  // (raw block, anchor)
        q.emplace(static_cast<int>(root), raw[root].verts.front());
        new_index[root] = -2;
        std::vector<int> parent_raw(raw.size(), -1);
        while (!q.empty()) {
            auto [bi, anchor] = q.front();
            q.pop();
            const Raw& r = raw[bi];
            Block b;
            b.anchor = anchor;
            b.component = component;
            b.parent = parent_raw[bi] >= 0 ? new_index[parent_raw[bi]] : -1;
            const auto nv = r.verts.size();
            b.is_bridge = nv == 2 && r.edges.size() == 1;
            b.is_cycle = nv >= 3 && r.edges.size() == nv;
            if (b.is_cycle) {
                // Walk the cycle from the anchor, first towards its smaller neighbour.
                std::map<Vertex, std::vector<Vertex>> adj;
                for (auto [x, y] : r.edges) adj[x].push_back(y), adj[y].push_back(x);
                auto& first = adj[anchor];
                Vertex prev = anchor, cur = std::min(first[0], first[1]);
                b.vertices.push_back(anchor);
                while (cur != anchor) {
                    b.vertices.push_back(cur);
                    const auto& nb = adj[cur];
                    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
                    prev = cur;
                    cur = next;
                }
            } else {
                b.vertices.push_back(anchor);
                for (Vertex v : r.verts)
                    if (v != anchor) b.vertices.push_back(v);
            }
            new_index[bi] = static_cast<int>(out.blocks.size());
            out.blocks.push_back(b);
            for (Vertex v : out.blocks.back().vertices)
                for (int other : blocks_of[v])
                    if (new_index[other] == -1) {
                        new_index[other] = -2;
                        parent_raw[other] = bi;
                        q.emplace(other, v);
                    }
        }
        ++component;
    }

    for (Vertex v = 0; v < n; ++v)
        if (blocks_of[v].size() >= 2) {
            out.cut_vertices.push_back(v);
            for (int bi : blocks_of[v]) out.tree_edges.emplace_back(new_index[bi], v);
        }
    std::sort(out.tree_edges.begin(), out.tree_edges.end());
    return out;
}

// ------------------------------------------------------------ caterpillars

std::optional<std::vector<Vertex>> caterpillar_spine(const Graph& t) {
    if (!is_tree(t)) throw InputError("caterpillar_spine needs a tree");
    const int n = t.order();
    if (n == 1) return std::vector<Vertex>{0};
    if (n == 2) return std::vector<Vertex>{0, 1};

    std::vector<Vertex> inner;
    for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) >= 2) inner.push_back(v);
    const Graph h = induced_subgraph(t, inner);
    // h is a tree; it is a path iff no vertex has degree > 2.
    Vertex start = 0;
    for (Vertex i = 0; i < h.order(); ++i) {
        if (h.degree(i) > 2) return std::nullopt;
        if (h.degree(i) <= 1 && h.degree(start) > 1) start = i;
    }
    if (h.degree(start) > 1) start = 0;

    std::vector<Vertex> path{inner[start]};
    for (Vertex prev = -1, cur = start;;) {
        Vertex next = -1;
        for (Vertex w : h.neighbors(cur))
            if (w != prev) next = w;
        if (next < 0) break;
        path.push_back(inner[next]);
        prev = cur;
        cur = next;
    }

    auto leaf_at = [&](Vertex v, Vertex avoid) {
        for (Vertex w : t.neighbors(v))
            if (t.degree(w) == 1 && w != avoid) return w;
        throw std::logic_error("spine end without a leaf");
    };
    const Vertex head = leaf_at(path.front(), -1);
    const Vertex tail = leaf_at(path.back(), head);
    path.insert(path.begin(), head);
    path.push_back(tail);
    return path;
}

// -------------------------------------------------------------- outerpaths

namespace {

/// Inner faces of the polygon 0..n-1 (positions) with the given chords; each
/// face is its boundary in counterclockwise walk order.
std::vector<std::vector<int>> polygon_faces(int n, const std::set<Edge>& chords) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        adj[i].push_back((i + 1) % n);
        adj[(i + 1) % n].push_back(i);
    }
    for (auto [a, b] : chords) adj[a].push_back(b), adj[b].push_back(a);
    auto offset = [n](int from, int to) { return ((to - from) % n + n) % n; };

    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    auto walk = [&](int u0, int v0) {
        if (used.count({u0, v0})) return;
        std::vector<int> face;
        int u = u0, v = v0;
        do {
            used.insert({u, v});
            face.push_back(u);
            int best = -1;
            for (int w : adj[v])
                if (offset(v, w) < offset(v, u) && (best < 0 || offset(v, w) > offset(v, best))) best = w;
            u = v;
            v = best;
        } while (u != u0 || v != v0);
        faces.push_back(std::move(face));
    };
    for (int i = 0; i < n; ++i) walk(i, (i + 1) % n);
    for (auto [a, b] : chords) walk(a, b), walk(b, a);
    return faces;
}

int index_of(const std::vector<int>& face, int v) {
    return static_cast<int>(std::find(face.begin(), face.end(), v) - face.begin());
}

}  // namespace

Graph OuterpathStructure::completed(int n) const {
    Graph g(n);
    for (int i = 0; i < boundary.size(); ++i) g.add_edge(boundary.at(i), boundary.at(i + 1));
    for (auto [a, b] : chords) g.add_edge(a, b);
    for (auto [a, b] : added) g.add_edge(a, b);
    return g;
}

OuterpathStructure validate_outerpath(const Graph& g, const CircularOrder& hamiltonian) {
    const int n = g.order();
    if (hamiltonian.size() != n) throw InputError("outerpath order does not cover the vertex set");
    OuterpathStructure out;
    out.boundary = hamiltonian;
    out.attachment.assign(n, Edge{-1, -1});
    if (n <= 3) {
        out.sequence = hamiltonian.sequence();
        if (n == 3) out.triangles.push_back({out.sequence[0], out.sequence[1], out.sequence[2]});
        for (int i = 0; i < n && n == 3; ++i)
            if (!g.adjacent(hamiltonian.at(i), hamiltonian.at(i + 1)))
                out.added.push_back(make_edge(hamiltonian.at(i), hamiltonian.at(i + 1)));
        return out;
    }

    // Work in positions around the boundary.
    std::set<Edge> chords;
    for (auto [u, v] : g.edges()) {
        const int a = hamiltonian.position(u), b = hamiltonian.position(v);
        const int d = std::abs(a - b);
        if (d != 1 && d != n - 1) {
            chords.insert(make_edge(a, b));
            out.chords.push_back(make_edge(u, v));
        }
    }
    for (auto it = chords.begin(); it != chords.end(); ++it)
        for (auto jt = std::next(it); jt != chords.end(); ++jt) {
            const auto [a, b] = *it;
            const auto [c, d] = *jt;
            const bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c != a && c != b && d != a && d != b && c_in != d_in)
                throw DomainError("chords cross in the given boundary order");
        }
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(hamiltonian.at(i), hamiltonian.at(i + 1)))
            out.added.push_back(make_edge(hamiltonian.at(i), hamiltonian.at(i + 1)));

    auto faces = polygon_faces(n, chords);
    // Weak dual on the untriangulated faces must already be a path.
    std::vector<std::vector<Edge>> face_chords(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (size_t i = 0; i < face.size(); ++i) {
            const Edge e = make_edge(face[i], face[(i + 1) % face.size()]);
            if (chords.count(e)) face_chords[f].push_back(e);
        }
        if (face_chords[f].size() > 2) throw DomainError("no triangulation of the given drawing has a path as weak dual");
    }

    // Strip-triangulate each face from one chord (or edge) towards the other.
    std::set<Edge> all_chords = chords;
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        const int m = static_cast<int>(face.size());
        if (m == 3) continue;
        auto find_edge = [&](Edge e) {
            for (int i = 0; i < m; ++i)
                if (make_edge(face[i], face[(i + 1) % m]) == e) return i;
            return -1;
        };
        const int s = face_chords[f].empty() ? 0 : find_edge(face_chords[f][0]);
        const int t = face_chords[f].size() == 2 ? find_edge(face_chords[f][1]) : (s + m / 2) % m;
        // Left chain walks backwards from face[s] to face[t+1], right chain
        // forwards from face[s+1] to face[t].
        int x = s, y = (s + 1) % m;
        const int x_end = (t + 1) % m, y_end = t;
        bool move_left = true;
        while (x != x_end || y != y_end) {
            const bool can_left = x != x_end, can_right = y != y_end;
            if (can_left && (move_left || !can_right)) x = (x - 1 + m) % m;
            else y = (y + 1) % m;
            move_left = !move_left;
            const Edge e = make_edge(face[x], face[y]);
            const int d = std::abs(e.first - e.second);
            if (d != 1 && d != n - 1 && all_chords.insert(e).second)
                out.added.push_back(make_edge(hamiltonian.at(e.first), hamiltonian.at(e.second)));
        }
    }

    // Triangles and their dual path.
    faces = polygon_faces(n, all_chords);
    const int tcount = static_cast<int>(faces.size());
    if (tcount != n - 2) throw std::logic_error("outerpath triangulation produced wrong face count");
    std::map<Edge, std::vector<int>> by_chord;
    for (int f = 0; f < tcount; ++f) {
        if (faces[f].size() != 3) throw std::logic_error("outerpath face is not a triangle");
        for (int i = 0; i < 3; ++i) {
            const Edge e = make_edge(faces[f][i], faces[f][(i + 1) % 3]);
            if (all_chords.count(e)) by_chord[e].push_back(f);
        }
    }
    std::vector<std::vector<int>> dual(tcount);
    for (auto& [e, fs] : by_chord) {
        dual[fs[0]].push_back(fs[1]);
        dual[fs[1]].push_back(fs[0]);
    }
    // The tip of an end triangle is its vertex not on the shared chord.
    auto tip = [&](int f) {
        if (dual[f].empty()) return *std::min_element(faces[f].begin(), faces[f].end());
        const auto& other = faces[dual[f][0]];
        for (int v : faces[f])
            if (index_of(other, v) == 3) return v;
        throw std::logic_error("end triangle without tip");
    };
    int first = -1;
    for (int f = 0; f < tcount; ++f) {
        if (dual[f].size() > 2) throw DomainError("weak dual is not a path");
        if (dual[f].size() <= 1 && (first < 0 || hamiltonian.at(tip(f)) < hamiltonian.at(tip(first)))) first = f;
    }
    std::vector<int> path{first};
    for (int prev = -1, cur = first;;) {
        int next = -1;
        for (int w : dual[cur])
            if (w != prev) next = w;
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(path.size()) != tcount) throw DomainError("weak dual is not a path");

    // v1 is the tip of t1; v2, v3 follow in boundary order; later vertices
    // are the new vertex of each triangle.
    std::vector<int> seq;
    const int v1 = tip(first);
    seq.push_back(v1);
    for (int k = 1; k < n; ++k) {
        const int p = (v1 + k) % n;
        if (index_of(faces[first], p) < 3) seq.push_back(p);
    }
    std::vector<char> seen(n, 0);
    for (int v : seq) seen[v] = 1;
    for (int i = 1; i < tcount; ++i)
        for (int v : faces[path[i]])
            if (!seen[v]) {
                seen[v] = 1;
                seq.push_back(v);
            }
    // e_i is the chord shared by t_{i-2} and t_{i-1}; it contains v_i.
    for (int i = 3; i < n; ++i) {
        const auto& a = faces[path[i - 3]];
        const auto& b = faces[path[i - 2]];
        std::vector<int> shared;
        for (int v : a)
            if (index_of(b, v) < 3) shared.push_back(v);
        out.attachment[i - 1] = make_edge(hamiltonian.at(shared[0]), hamiltonian.at(shared[1]));
    }
    for (int f : path) out.triangles.push_back({hamiltonian.at(faces[f][0]), hamiltonian.at(faces[f][1]), hamiltonian.at(faces[f][2])});
    for (int p : seq) out.sequence.push_back(hamiltonian.at(p));
    return out;
}

}  // namespace oor

#include "oor/constructors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "oor/arrangement.hpp"
#include "oor/generators.hpp"
#include "oor/verifier.hpp"

namespace oor {

namespace {

constexpr int kMaxHalvings = 256;

Rat cross(const RatPoint& u, const RatPoint& v) { return u[0] * v[1] - u[1] * v[0]; }
RatPoint minus(const RatPoint& p, const RatPoint& q) { return {p[0] - q[0], p[1] - q[1]}; }

// Strictly inside the open cone at apex spanned by the rays towards p and q.
bool in_open_cone(const RatPoint& apex, const RatPoint& p, const RatPoint& q, const RatPoint& x) {
    RatPoint a = minus(p, apex), b = minus(q, apex);
    if (cross(a, b).sign() < 0) std::swap(a, b);
    const RatPoint w = minus(x, apex);
    return cross(a, w).sign() > 0 && cross(w, b).sign() > 0;
}

class TwoTreeBuilder {
public:
    TwoTreeBuilder(const StackingPlan& plan, const Graph& tree)
        : plan_(plan), tree_(tree), n_(plan.n), at_(plan.n), placed_(plan.n, 0), arcs_(plan.n), rank_(plan.n, -1) {
        for (size_t i = 0; i < plan.events.size(); ++i) rank_[plan.events[i].vertex] = static_cast<int>(i);
        groups_.resize(n_);
        for (const auto& ev : plan.events) {
            const auto [a, b] = ev.parent;
            if (ev.parent == make_edge(plan.base.first, plan.base.second)) {
                base_group_.push_back(ev.vertex);
                continue;
            }
            const Vertex younger = rank_[a] > rank_[b] ? a : b;
            groups_[younger].emplace_back(ev.vertex, younger == a ? b : a);
        }
    }

    ConstructionTrace run() {
        const Vertex a = plan_.base.first, b = plan_.base.second;
        place(a, {Rat(0), Rat(0)});
        place(b, {Rat(1), Rat(0)});
        const int m = static_cast<int>(base_group_.size());
        for (int k = 0; k < m; ++k) place(base_group_[k], {Rat(k + 1, m + 1), Rat(1)});
        for (Vertex w : base_group_) attach_arc(w, a, b);
        snapshot(-1, base_group_, Rat(1), Rat(0), 0);

        std::deque<Vertex> queue(base_group_.begin(), base_group_.end());
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            const auto added = expand(v);
            queue.insert(queue.end(), added.begin(), added.end());
        }
        return std::move(trace_);
    }

    const std::vector<RatPoint>& coords() const { return at_; }

private:
    void place(Vertex v, RatPoint p) {
        at_[v] = std::move(p);
        placed_[v] = 1;
        present_.push_back(v);
    }

    std::vector<Edge> present_edges() const {
        std::vector<Edge> out;
        for (size_t i = 0; i < present_.size(); ++i)
            for (size_t j = i + 1; j < present_.size(); ++j)
                if (tree_.adjacent(present_[i], present_[j])) out.push_back(make_edge(present_[i], present_[j]));
        return out;
    }

    // Largest power-of-two radius at most half the distance to every
    // non-incident feature whose circle neither crosses nor touches another arc's.
    void attach_arc(Vertex w, Vertex p, Vertex q) {
        Rat limit = -1;
        auto consider = [&](const Rat& d2) {
            if (limit.sign() < 0 || d2 < limit) limit = d2;
        };
        for (Vertex u : present_)
            if (u != w) consider(dist2(at_[w], at_[u]));
        for (const auto& [x, y] : present_edges())
            if (x != w && y != w) consider(segment_dist2(at_[w], at_[x], at_[y]));
        Rat r(1);
        while (4 * r * r > limit) r /= 2;
        auto clear_of_arcs = [&](const Rat& radius) {
            for (Vertex u : present_) {
                if (u == w || !arcs_[u]) continue;
                const Rat d2 = dist2(at_[w], at_[u]);
                const Rat& ru = arcs_[u]->arc.radius;
                const Rat sum = radius + ru, gap = ru - radius;
                if (!(sum * sum < d2 || (gap.sign() > 0 && gap * gap > d2))) return false;
            }
            return true;
        };
        for (int i = 0; !clear_of_arcs(r); ++i) {
            if (i == kMaxHalvings) throw std::logic_error("no admissible arc radius");
            r /= 2;
        }
        // Left parent first: counterclockwise from it sweeps the lower wedge.
        if (cross(minus(at_[p], at_[w]), minus(at_[q], at_[w])).sign() < 0) std::swap(p, q);
        VertexArc arc;
        arc.vertex = w;
        arc.left_parent = p;
        arc.right_parent = q;
        arc.arc = ReflexArc{at_[w], r, minus(at_[p], at_[w]), minus(at_[q], at_[w])};
        arc.active = true;
        arcs_[w] = arc;
    }

    std::vector<Vertex> expand(Vertex v) {
        VertexArc& va = *arcs_[v];
        va.active = false;
        std::vector<std::pair<Vertex, Vertex>> left, right;
        for (const auto& [w, p] : groups_[v]) (p == va.left_parent ? left : right).emplace_back(w, p);
        if (left.empty() && right.empty()) return {};

        const RatPoint pv = at_[v], pl = at_[va.left_parent], pr = at_[va.right_parent];
        const Rat r = va.arc.radius;
        // Common line h above v, low enough that both extended parent edges
        // cross it well inside the disk.
        Rat eta = r / 2;
        auto on_line = [&](const RatPoint& from, const Rat& height) {
            const Rat t = height / (pv[1] - from[1]);
            return RatPoint{pv[0] + t * (pv[0] - from[0]), pv[1] + height};
        };
        RatPoint xl, xr;
        for (int i = 0;; ++i) {
            if (i == kMaxHalvings) throw std::logic_error("no admissible line height");
            xl = on_line(pl, eta);
            xr = on_line(pr, eta);
            if (4 * dist2(xl, pv) < r * r && 4 * dist2(xr, pv) < r * r) break;
            eta /= 2;
        }

        Rat offset = r / 4;
        std::vector<RatPoint> spots;
        int halvings = 0;
        for (;; ++halvings) {
            if (halvings == kMaxHalvings) throw std::logic_error("could not place a stacked group");
            spots.clear();
            const int i = static_cast<int>(left.size()), j = static_cast<int>(right.size());
            for (int k = 1; k <= i; ++k) spots.push_back({xl[0] + offset * k / i, xl[1]});
            for (int k = 1; k <= j; ++k) spots.push_back({xr[0] - offset * k / j, xr[1]});
            if (group_fits(va, left, right, spots)) break;
            offset /= 2;
        }

        std::vector<Vertex> added;
        for (size_t k = 0; k < spots.size(); ++k) {
            const Vertex w = k < left.size() ? left[k].first : right[k - left.size()].first;
            place(w, spots[k]);
            added.push_back(w);
        }
        for (size_t k = 0; k < added.size(); ++k) {
            const Vertex p = k < left.size() ? left[k].second : right[k - left.size()].second;
            attach_arc(added[k], v, p);
        }
        snapshot(v, added, pv[1] + eta, offset, halvings);
        return added;
    }

    // New vertices inside the sector of v, their parent edges clear of v's
    // arc, and no vertex in the downward cone of any new vertex.
    bool group_fits(const VertexArc& va, const std::vector<std::pair<Vertex, Vertex>>& left,
                    const std::vector<std::pair<Vertex, Vertex>>& right, const std::vector<RatPoint>& spots) const {
        const RatPoint& pv = at_[va.vertex];
        for (size_t k = 0; k < spots.size(); ++k) {
            const RatPoint& s = spots[k];
            const Vertex p = k < left.size() ? left[k].second : right[k - left.size()].second;
            if (!point_in_sector(va.arc, s)) return false;
            if (arc_meets_segment(va.arc, s, at_[p]) || arc_meets_segment(va.arc, s, pv)) return false;
            for (Vertex u : present_)
                if (u != va.vertex && u != p && in_open_cone(s, pv, at_[p], at_[u])) return false;
            for (size_t o = 0; o < spots.size(); ++o)
                if (o != k && in_open_cone(s, pv, at_[p], spots[o])) return false;
        }
        return true;
    }

    void snapshot(Vertex expanded, std::vector<Vertex> added, Rat height, Rat offset, int halvings) {
        ConstructionStep step;
        step.expanded = expanded;
        step.added = std::move(added);
        step.line_height = std::move(height);
        step.offset = std::move(offset);
        step.halvings = halvings;
        step.present = present_;
        step.coords = at_;
        for (Vertex u : present_)
            if (arcs_[u]) step.arcs.push_back(*arcs_[u]);
        trace_.steps.push_back(std::move(step));
    }

    const StackingPlan& plan_;
    const Graph& tree_;
    int n_;
    std::vector<RatPoint> at_;
    std::vector<char> placed_;
    std::vector<std::optional<VertexArc>> arcs_;
    std::vector<int> rank_;
    std::vector<Vertex> base_group_;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> groups_;
    std::vector<Vertex> present_;
    ConstructionTrace trace_;
};

void insert_after(std::vector<Vertex>& seq, Vertex anchor, const std::vector<Vertex>& items) {
    const auto it = std::find(seq.begin(), seq.end(), anchor);
    if (it == seq.end()) throw std::logic_error("anchor not yet placed");
    seq.insert(it + 1, items.begin(), items.end());
}

}  // namespace

std::pair<Placement, ConstructionTrace> construct_two_tree(const StackingPlan& plan) {
    const Graph tree = plan.replay();
    if (tree.order() < 2) throw InputError("stacking plan needs at least the base edge");
    TwoTreeBuilder builder(plan, tree);
    ConstructionTrace trace = builder.run();
    Placement pl = rational_placement(builder.coords());
    const auto report = verify_oor(tree, pl);
    if (!report.valid || !report.reducible || !report.vertices_on_outer_face)
        throw std::logic_error("two-tree construction failed verification");
    if (!plan.fill.empty()) pl = restrict_representation(tree, pl, report, plan.fill, {}).second;
    return {std::move(pl), std::move(trace)};
}

std::vector<std::string> two_tree_invariant_violations(const Graph& two_tree, const ConstructionStep& step) {
    std::vector<std::string> out;
    const auto& at = step.coords;
    std::vector<Edge> edges;
    for (size_t i = 0; i < step.present.size(); ++i)
        for (size_t j = i + 1; j < step.present.size(); ++j)
            if (two_tree.adjacent(step.present[i], step.present[j]))
                edges.push_back(make_edge(step.present[i], step.present[j]));
    std::vector<HPoint<Rat>> pts;
    std::vector<LabeledSegment<Rat>> segs;
    std::map<Vertex, int> node_of;
    for (Vertex v : step.present) pts.push_back(HPoint<Rat>::affine(at[v][0], at[v][1]));
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        segs.push_back({{HPoint<Rat>::affine(at[u][0], at[u][1]), HPoint<Rat>::affine(at[v][0], at[v][1])},
                        static_cast<int>(e)});
    }
    const PlanarSubdivision<Rat> sub(segs, pts);
    std::map<Vertex, const VertexArc*> arc_of;
    for (const auto& a : step.arcs) arc_of[a.vertex] = &a;
    const auto name = [](Vertex v) { return std::to_string(v); };

    for (const auto& va : step.arcs) {
        const Vertex w = va.vertex;
        if (!(at[va.left_parent][1] < at[w][1] && at[va.right_parent][1] < at[w][1]))
            out.push_back("parent edges of " + name(w) + " are not below it");
        for (const auto& [x, y] : edges)
            if (arc_meets_segment(va.arc, at[x], at[y])) out.push_back("arc of " + name(w) + " meets an edge");
        for (Vertex u : step.present)
            if (point_on_arc(va.arc, at[u])) out.push_back("arc of " + name(w) + " passes through a vertex");
        const auto top = sub.classify_point(HPoint<Rat>::affine(va.arc.top()[0], va.arc.top()[1]));
        if (top.kind != LocationKind::Face || top.id != PlanarSubdivision<Rat>::kUnbounded)
            out.push_back("arc of " + name(w) + " is not in the outer face");
    }

    for (size_t i = 0; i < step.present.size(); ++i)
        for (size_t j = i + 1; j < step.present.size(); ++j) {
            const Vertex u = step.present[i], v = step.present[j];
            if (two_tree.adjacent(u, v)) continue;
            bool hit = false;
            for (Vertex x : {u, v})
                if (arc_of.count(x) && arc_meets_segment(arc_of[x]->arc, at[u], at[v])) hit = true;
            if (!hit) out.push_back("non-edge " + name(u) + "-" + name(v) + " misses both arcs");
        }

    for (const auto& va : step.arcs) {
        if (!va.active) continue;
        const Vertex v = va.vertex;
        for (Vertex u : step.present)
            if (u != v && point_in_sector(va.arc, at[u])) out.push_back("vertex inside the region of " + name(v));
        for (const auto& [x, y] : edges)
            if (x != v && y != v && sector_meets_segment(va.arc, at[x], at[y]))
                out.push_back("edge inside the region of " + name(v));
        for (const auto& other : step.arcs)
            if (other.vertex != v && (arcs_meet(other.arc, va.arc) || point_in_sector(va.arc, other.arc.top())))
                out.push_back("arc inside the region of " + name(v));
    }

    for (size_t k = 0; k < step.present.size(); ++k)
        if (!sub.node_on_outer_face(*sub.find_node(pts[k])))
            out.push_back("vertex " + name(step.present[k]) + " is not on the outer face");
    return out;
}

CircularOrder construct_cactus_order(const Graph& g, const BlockDecomposition& bd) {
    if (!bd.is_cactus()) throw DomainError("graph is not a cactus");
    std::vector<Vertex> seq;
    for (const auto& block : bd.blocks) {
        std::vector<Vertex> tail;
        if (block.is_cycle) {
            // Cycle positions 1, k, 2, k-1, ...: odd indices ascending, then
            // even indices descending.
            const auto& c = block.vertices;
            for (size_t i = 2; i < c.size(); i += 2) tail.push_back(c[i]);
            for (size_t i = (c.size() % 2 == 0 ? c.size() : c.size() - 1); i >= 2; i -= 2) tail.push_back(c[i - 1]);
        } else {
            tail.assign(block.vertices.begin() + 1, block.vertices.end());
        }
        if (block.parent < 0) {
            seq.push_back(block.anchor);
            seq.insert(seq.end(), tail.begin(), tail.end());
        } else {
            insert_after(seq, block.anchor, tail);
        }
    }
    if (static_cast<int>(seq.size()) != g.order()) throw InputError("block decomposition does not match the graph");
    return CircularOrder(std::move(seq));
}

CircularOrder construct_grid_order(int k, int l) {
    if (k < 2 || l < 2) throw InputError("grid order needs k, l >= 2");
    // 1-based path positions: k, k-2, ... down to 1 or 2, then the other
    // parity up to k-1.
    std::vector<int> copy;
    for (int i = k; i >= 1; i -= 2) copy.push_back(i);
    for (int i = (k % 2 == 0 ? 1 : 2); i <= k - 1; i += 2) copy.push_back(i);
    std::vector<Vertex> seq;
    for (int j = 0; j < l; ++j)
        for (int i : copy) seq.push_back(j * k + i - 1);
    return CircularOrder(std::move(seq));
}

CircularOrder construct_outerpath_order(const OuterpathStructure& op) {
    const int n = op.boundary.size();
    if (static_cast<int>(op.sequence.size()) != n) throw InputError("outerpath structure is incomplete");
    if (n <= 3) return CircularOrder(op.sequence);
    std::vector<Vertex> seq(op.sequence.begin(), op.sequence.begin() + 3);
    auto other_end = [](const Edge& e, Vertex v) { return e.first == v ? e.second : e.first; };
    for (int idx = 3; idx < n; ++idx) {
        const Vertex v = op.sequence[idx];
        const Vertex anchor = idx + 1 < n ? other_end(op.attachment[idx], v) : op.sequence[idx - 1];
        const Edge& previous = op.attachment[idx - 1];
        if (previous.first != anchor && previous.second != anchor)
            throw InputError("outerpath attachment does not share a vertex with the previous chord");
        const Vertex avoid = other_end(previous, anchor);
        const int m = static_cast<int>(seq.size());
        const int at = static_cast<int>(std::find(seq.begin(), seq.end(), anchor) - seq.begin());
        if (seq[(at + 1) % m] == avoid)
            seq.insert(seq.begin() + at, v);
        else if (seq[(at + m - 1) % m] == avoid)
            seq.insert(seq.begin() + at + 1, v);
        else
            throw std::logic_error("outerpath chord endpoints are not consecutive");
    }
    return CircularOrder(std::move(seq));
}

CircularOrder construct_caterpillar_complement_order(const Graph& t) {
    const auto spine = caterpillar_spine(t);
    if (!spine) throw DomainError("tree is not a caterpillar");
    if (t.order() <= 2) {
        std::vector<Vertex> seq(t.order());
        for (int v = 0; v < t.order(); ++v) seq[v] = v;
        return CircularOrder(std::move(seq));
    }
    std::vector<char> on_spine(t.order(), 0);
    for (Vertex p : *spine) on_spine[p] = 1;
    std::vector<Vertex> seq;
    for (size_t i = 0; i < spine->size(); ++i) {
        const Vertex p = (*spine)[i];
        seq.push_back(p);
        if (i == 0 || i + 1 == spine->size()) continue;
        for (Vertex w : t.neighbors(p))
            if (!on_spine[w]) seq.push_back(w);
    }
    return CircularOrder(std::move(seq));
}

KnMinusCkOrder construct_kn_minus_ck_order(int n, int k) {
    if (k < 3 || k > n) throw InputError("G(n,k) needs 3 <= k <= n");
    if (k != 3 && k != 4 && k != n) throw DomainError("no regular representation order for this k");
    std::vector<Vertex> seq(n);
    for (int v = 0; v < n; ++v) seq[v] = v;
    std::vector<Vertex> cover = seq;
    if (k == 4 && n != 4) {
        std::swap(seq[2], seq[3]);
        cover = {};
        for (Vertex v = 0; v < n; ++v)
            if (v != 1 && v != 3) cover.push_back(v);
    }
    KnMinusCkOrder out{CircularOrder(std::move(seq)), std::move(cover)};
    if (!check_cnp(kn_minus_ck(n, k), out.order, out.cover).holds)
        throw std::logic_error("G(n,k) order lacks the consecutive-neighbours property");
    return out;
}

CircularOrder construct_cnp_order(const Graph& g, const CircularOrder& certificate) {
    std::vector<char> in(g.order(), 0);
    for (const auto& [u, v] : g.non_edges()) in[u] = in[v] = 1;
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < g.order(); ++v)
        if (in[v]) cover.push_back(v);
    const auto result = check_cnp(g, certificate, cover);
    if (!result.holds) {
        const std::string who = result.broken ? "vertex " + std::to_string(*result.broken) : "the cover";
        throw DomainError("order lacks the consecutive-neighbours property at " + who);
    }
    return certificate;
}

}  // namespace oor

#include "oor/gap_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <random>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "oor/graph6.hpp"
#include "oor/placement.hpp"
#include "oor/verifier.hpp"

namespace oor {

using json = nlohmann::json;
using Mask = std::uint64_t;

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

Mask bit(Vertex v) { return Mask{1} << v; }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

std::vector<Mask> masks_of(const Graph& g) {
    if (g.order() > 64) throw InputError("gap search supports at most 64 vertices");
    return g.adjacency_masks();
}

// First cut i in seq[0..len) (between seq[i] and seq[i+1]) with no edge from
// seq[0..i] to seq[i+1..len); -1 if none.
int first_cut(const std::vector<Mask>& adj, const Vertex* seq, int len) {
    Mask suffix[65];
    suffix[len] = 0;
    for (int i = len - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | bit(seq[i]);
    Mask reach = 0;
    for (int i = 0; i + 1 < len; ++i) {
        reach |= adj[seq[i]];
        if ((reach & suffix[i + 1]) == 0) return i;
    }
    return -1;
}

std::vector<Vertex> walk(const CircularOrder& order, Vertex from, Vertex to) { return order.closed_interval(from, to); }

void check_sizes(const Graph& g, const CircularOrder& order) {
    if (order.size() != g.order()) throw InputError("order size does not match the graph");
}

// Depth-first enumeration of canonical orders with optional gap pruning.
class OrderSearch {
public:
    OrderSearch(const Graph& g, const SearchOptions& opts, std::function<bool(const std::vector<Vertex>&)> leaf,
                std::atomic<std::uint64_t>* shared_nodes, const std::atomic<int>* stop_below)
        : n_(g.order()), adj_(masks_of(g)), opts_(opts), leaf_(std::move(leaf)), shared_nodes_(shared_nodes),
          stop_below_(stop_below), start_(std::chrono::steady_clock::now()) {
        index_.assign(n_, -1);
        for (const auto& [u, v] : g.non_edges()) {
            nonedges_of_.resize(n_);
            nonedges_of_[u].push_back(v);
            nonedges_of_[v].push_back(u);
        }
        nonedges_of_.resize(n_);
    }

    // Searches the subtree with `second` at position 1 (or everything if -1).
    SearchOutcome run(int second) {
        SearchOutcome out;
        perm_.clear();
        place(0);
        if (n_ == 1) {
            visit_leaf(out);
        } else {
            for (Vertex s = 1; s < n_ && !done_; ++s) {
                if (second >= 0 && s != second) continue;
                descend(s, out);
            }
        }
        if (!found_ && !aborted_) out.status = budget_hit_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
        out.nodes = nodes_;
        out.seconds = elapsed();
        return out;
    }

    bool aborted() const { return aborted_; }

private:
    double elapsed() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

    void place(Vertex v) {
        index_[v] = static_cast<int>(perm_.size());
        perm_.push_back(v);
    }
    void unplace() {
        index_[perm_.back()] = -1;
        perm_.pop_back();
    }

    bool over_budget() {
        ++nodes_;
        if (shared_nodes_) ++*shared_nodes_;
        const std::uint64_t total = shared_nodes_ ? shared_nodes_->load() : nodes_;
        if (opts_.budget.max_nodes && total > opts_.budget.max_nodes) return budget_hit_ = true;
        if ((nodes_ & 1023) == 0) {
            if (opts_.budget.max_seconds > 0 && elapsed() > opts_.budget.max_seconds) return budget_hit_ = true;
            if (stop_below_ && stop_below_->load() < current_second_) return aborted_ = true;
        }
        return false;
    }

    // Canonical completions of the current prefix.
    std::uint64_t completions() const {
        const int rest = n_ - static_cast<int>(perm_.size());
        if (rest == 0) return perm_.size() < 3 || perm_[1] < perm_.back() ? 1 : 0;
        int larger = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (index_[v] < 0 && v > perm_[1]) ++larger;
        return saturating_mul(factorial(rest - 1), static_cast<std::uint64_t>(larger));
    }

    // The placed prefix read as a circular order: does non-edge (u, z) still
    // have a cut on some side? Sets `settled` when the side inside the prefix
    // already works (it never changes afterwards).
    bool side_inside(Vertex u, Vertex z) const {
        const int a = std::min(index_[u], index_[z]), b = std::max(index_[u], index_[z]);
        return first_cut(adj_, perm_.data() + a, b - a + 1) >= 0;
    }
    bool side_wrapping(Vertex u, Vertex z) const {
        const int a = std::min(index_[u], index_[z]), b = std::max(index_[u], index_[z]);
        Vertex seq[64];
        int len = 0;
        for (int i = b; i < static_cast<int>(perm_.size()); ++i) seq[len++] = perm_[i];
        for (int i = 0; i <= a; ++i) seq[len++] = perm_[i];
        return first_cut(adj_, seq, len) >= 0;
    }

    void descend(Vertex v, SearchOutcome& out) {
        if (perm_.size() == 1) current_second_ = v;
        if (over_budget()) {
            done_ = true;
            return;
        }
        place(v);
        const size_t unsettled_mark = unsettled_.size();
        bool dead = false;
        if (opts_.prune) {
            for (Vertex u : nonedges_of_[v])
                if (index_[u] >= 0 && index_[u] != index_[v]) {
                    if (!side_inside(u, v)) unsettled_.emplace_back(u, v);
                }
            for (const auto& [a, b] : unsettled_)
                if (!side_wrapping(a, b)) {
                    dead = true;
                    break;
                }
        }
        const int placed = static_cast<int>(perm_.size());
        if (!dead && placed >= 2 && placed < n_) {
            bool any_larger = false;
            for (Vertex w = perm_[1] + 1; w < n_ && !any_larger; ++w) any_larger = index_[w] < 0;
            dead = !any_larger;
        }
        if (dead) {
            out.orders = saturating_add(out.orders, completions());
        } else if (placed == n_) {
            visit_leaf(out);
        } else {
            for (Vertex w = 1; w < n_ && !done_; ++w)
                if (index_[w] < 0) descend(w, out);
        }
        unsettled_.resize(unsettled_mark);
        unplace();
    }

    void visit_leaf(SearchOutcome& out) {
        if (perm_.size() >= 3 && perm_[1] > perm_.back()) return;
        out.orders = saturating_add(out.orders, 1);
        if (leaf_(perm_)) {
            found_ = done_ = true;
            out.status = SearchStatus::Found;
            out.order = CircularOrder(perm_);
        }
    }

    int n_;
    std::vector<Mask> adj_;
    SearchOptions opts_;
    std::function<bool(const std::vector<Vertex>&)> leaf_;
    std::atomic<std::uint64_t>* shared_nodes_;
    const std::atomic<int>* stop_below_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Vertex> perm_;
    std::vector<int> index_;
    std::vector<std::vector<Vertex>> nonedges_of_;
    std::vector<std::pair<Vertex, Vertex>> unsettled_;
    std::uint64_t nodes_ = 0;
    int current_second_ = -1;
    bool done_ = false, found_ = false, budget_hit_ = false, aborted_ = false;
};

// Runs the search sequentially or split on the second vertex. Results are
// merged in canonical order so counts match the sequential run.
SearchOutcome run_search(const Graph& g, const SearchOptions& opts,
                         const std::function<bool(const std::vector<Vertex>&, SearchOutcome&)>& accept) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.order();
    if (n == 0) throw InputError("search needs at least one vertex");
    const int jobs = std::max(1, opts.jobs);
    SearchOutcome result;
    if (jobs == 1 || n < 4) {
        SearchOutcome stats;
        OrderSearch search(g, opts, [&](const std::vector<Vertex>& p) { return accept(p, stats); }, nullptr, nullptr);
        result = search.run(-1);
        result.gap_survivors = stats.gap_survivors;
        result.verified = stats.verified;
    } else {
        std::vector<SearchOutcome> parts(n), stats(n);
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<int> found_at{n};
        std::atomic<int> next{1};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (int s = next++; s < n; s = next++) {
                    if (found_at.load() < s) continue;
                    OrderSearch search(g, opts, [&, s](const std::vector<Vertex>& p) { return accept(p, stats[s]); },
                                       &nodes, &found_at);
                    parts[s] = search.run(s);
                    if (parts[s].status == SearchStatus::Found) {
                        int cur = found_at.load();
                        while (s < cur && !found_at.compare_exchange_weak(cur, s)) {
                        }
                    }
                }
            });
        for (auto& t : pool) t.join();
        result.status = SearchStatus::Exhausted;
        for (int s = 1; s < n; ++s) {
            const auto& p = parts[s];
            result.orders = saturating_add(result.orders, p.orders);
            result.nodes += p.nodes;
            result.gap_survivors += stats[s].gap_survivors;
            result.verified += stats[s].verified;
            if (p.status == SearchStatus::Found) {
                result.status = SearchStatus::Found;
                result.order = p.order;
                break;
            }
            if (p.status == SearchStatus::BudgetExceeded) {
                result.status = SearchStatus::BudgetExceeded;
                break;
            }
        }
    }
    if (result.status == SearchStatus::Found) result.witnesses = gap_condition(g, *result.order).witnesses;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

int unserved_nonedges(const std::vector<Mask>& adj, const std::vector<Edge>& nonedges, const std::vector<Vertex>& seq,
                      std::vector<int>& index) {
    const int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i) index[seq[i]] = i;
    Vertex buf[64];
    int bad = 0;
    for (const auto& [x, y] : nonedges) {
        bool served = false;
        for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
            int len = 0;
            for (int i = index[a];; i = (i + 1) % n) {
                buf[len++] = seq[i];
                if (seq[i] == b) break;
            }
            if (first_cut(adj, buf, len) >= 0) {
                served = true;
                break;
            }
        }
        bad += !served;
    }
    return bad;
}

// Simulated annealing on the number of non-edges without a candidate gap.
std::optional<std::vector<Vertex>> anneal(const Graph& g, std::uint64_t steps, std::uint64_t seed,
                                          std::uint64_t& used) {
    const int n = g.order();
    const auto adj = masks_of(g);
    const auto nonedges = g.non_edges();
    std::mt19937_64 rng(seed);
    std::vector<Vertex> cur(n), next;
    std::iota(cur.begin(), cur.end(), 0);
    std::shuffle(cur.begin(), cur.end(), rng);
    std::vector<int> index(n);
    int cost = unserved_nonedges(adj, nonedges, cur, index);
    std::uniform_real_distribution<double> unit(0, 1);
    double temperature = 2;
    for (used = 0; used < steps && cost > 0; ++used) {
        next = cur;
        const int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (rng() & 1) {
            std::swap(next[i], next[j]);
        } else {
            const Vertex v = next[i];
            next.erase(next.begin() + i);
            next.insert(next.begin() + j, v);
        }
        const int c = unserved_nonedges(adj, nonedges, next, index);
        if (c <= cost || unit(rng) < std::exp((cost - c) / temperature)) {
            cur.swap(next);
            cost = c;
        }
        temperature = std::max(0.05, temperature * 0.99999);
    }
    if (cost > 0) return std::nullopt;
    // Canonical form: rotate 0 to the front, reflect if needed.
    std::rotate(cur.begin(), std::find(cur.begin(), cur.end(), 0), cur.end());
    if (n >= 3 && cur[1] > cur.back()) std::reverse(cur.begin() + 1, cur.end());
    return cur;
}

}  // namespace

std::vector<Gap> candidate_gaps(const Graph& g, const CircularOrder& order, Vertex x, Vertex y) {
    check_sizes(g, order);
    if (x == y || g.adjacent(x, y)) throw InputError("candidate gaps need a non-edge");
    const auto adj = masks_of(g);
    std::vector<Gap> out;
    for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        const auto seq = walk(order, a, b);
        Mask suffix = 0;
        std::vector<Mask> suffixes(seq.size() + 1, 0);
        for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) suffixes[i] = suffix |= bit(seq[i]);
        Mask reach = 0;
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            reach |= adj[seq[i]];
            if ((reach & suffixes[i + 1]) == 0) out.push_back({seq[i], seq[i + 1]});
        }
    }
    return out;
}

GapConditionResult gap_condition(const Graph& g, const CircularOrder& order) {
    check_sizes(g, order);
    const auto adj = masks_of(g);
    GapConditionResult out;
    out.holds = true;
    for (const auto& [x, y] : g.non_edges()) {
        GapWitness w{x, y, std::nullopt, -1};
        int side = 0;
        for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
            const auto seq = walk(order, a, b);
            const int cut = first_cut(adj, seq.data(), static_cast<int>(seq.size()));
            if (cut >= 0) {
                w.gap = Gap{seq[cut], seq[cut + 1]};
                w.side = side;
                break;
            }
            ++side;
        }
        if (!w.gap) out.holds = false;
        out.witnesses.push_back(w);
    }
    return out;
}

std::uint64_t canonical_order_count(int n) {
    if (n < 3) return 1;
    return factorial(n - 1) / 2;
}

void for_each_canonical_order(int n, const std::function<bool(const CircularOrder&)>& visit) {
    if (n <= 0) return;
    std::vector<Vertex> rest(n - 1);
    for (int i = 0; i < n - 1; ++i) rest[i] = i + 1;
    do {
        if (n >= 3 && rest.front() > rest.back()) continue;
        std::vector<Vertex> seq{0};
        seq.insert(seq.end(), rest.begin(), rest.end());
        if (!visit(CircularOrder(std::move(seq)))) return;
    } while (std::next_permutation(rest.begin(), rest.end()));
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

json to_json(const SearchOutcome& o) {
    json j{{"status", to_string(o.status)}, {"orders", o.orders}, {"nodes", o.nodes}, {"seconds", o.seconds}};
    if (o.order) j["order"] = o.order->sequence();
    if (o.local_steps) j["local_steps"] = o.local_steps;
    if (o.gap_survivors || o.verified) {
        j["gap_survivors"] = o.gap_survivors;
        j["verified"] = o.verified;
    }
    if (!o.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : o.witnesses) {
            json r{{"nonedge", {w.x, w.y}}};
            r["gap"] = w.gap ? json{w.gap->from, w.gap->to} : json(nullptr);
            r["side"] = w.side;
            ws.push_back(r);
        }
        j["witnesses"] = ws;
    }
    return j;
}

SearchOutcome search_gap_order(const Graph& g, const SearchOptions& opts) {
    if (opts.local_search_steps > 0 && g.order() > 0) {
        const auto start = std::chrono::steady_clock::now();
        std::uint64_t used = 0;
        if (auto hit = anneal(g, opts.local_search_steps, opts.seed, used)) {
            SearchOutcome out;
            out.status = SearchStatus::Found;
            out.order = CircularOrder(std::move(*hit));
            const auto check = gap_condition(g, *out.order);
            if (!check.holds) throw std::logic_error("local search returned an order failing the gap condition");
            out.witnesses = check.witnesses;
            out.local_steps = used;
            out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return out;
        }
        SearchOptions rest = opts;
        rest.local_search_steps = 0;
        auto out = search_gap_order(g, rest);
        out.local_steps = used;
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return out;
    }
    return run_search(g, opts, [&](const std::vector<Vertex>& p, SearchOutcome&) {
        return opts.prune || gap_condition(g, CircularOrder(p)).holds;
    });
}

SearchOutcome search_regular_order(const Graph& g, const SearchOptions& opts) {
    if (g.order() < 3) throw InputError("regular search needs at least 3 vertices");
    return run_search(g, opts, [&](const std::vector<Vertex>& p, SearchOutcome& stats) {
        const CircularOrder order(p);
        if (!opts.prune && !gap_condition(g, order).holds) return false;
        ++stats.gap_survivors;
        ++stats.verified;
        return verify_oor(g, regular_placement(order)).valid;
    });
}

// ------------------------------------------------------------------ CNF

CircularOrder CnfInstance::decode(const std::vector<bool>& model) const {
    const int n = static_cast<int>(position_var.size());
    if (n == 0) throw InputError("instance carries no order variables");
    std::vector<Vertex> seq(n, -1);
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < n; ++i)
            if (model.at(position_var[v][i])) {
                if (seq[i] >= 0) throw InputError("model puts two vertices at one position");
                seq[i] = v;
            }
    return CircularOrder(std::move(seq));
}

CnfInstance encode_cnf(const Graph& g) {
    const int n = g.order();
    if (n < 3) throw InputError("CNF encoding needs at least 3 vertices");
    CnfInstance c;
    auto fresh = [&](std::string name) {
        c.names[std::move(name)] = ++c.num_vars;
        return c.num_vars;
    };
    auto tag = [](std::initializer_list<int> xs) {
        std::string s;
        for (int x : xs) s += "_" + std::to_string(x);
        return s;
    };
    c.position_var.assign(n, std::vector<int>(n));
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < n; ++i) c.position_var[v][i] = fresh("pos" + tag({v, i}));
    const auto& pos = c.position_var;
    // Permutation: each vertex somewhere, each position taken once.
    for (Vertex v = 0; v < n; ++v) {
        c.clauses.push_back(pos[v]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) c.clauses.push_back({-pos[v][i], -pos[v][j]});
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> some;
        for (Vertex v = 0; v < n; ++v) some.push_back(pos[v][i]);
        c.clauses.push_back(some);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) c.clauses.push_back({-pos[u][i], -pos[v][i]});
    }
    // Canonical form: vertex 0 first, second smaller than last.
    c.clauses.push_back({pos[0][0]});
    for (Vertex a = 1; a < n; ++a)
        for (Vertex b = 1; b < a; ++b) c.clauses.push_back({-pos[a][1], -pos[b][n - 1]});

    // Reading the circle from just after cut k (between positions k and
    // k+1), rank t holds position (k + 1 + t) mod n. at_least[k][v][t]: v's
    // rank is >= t; defined exactly by a chain.
    std::vector<std::vector<std::vector<int>>> at_least(n, std::vector<std::vector<int>>(n, std::vector<int>(n + 1, 0)));
    for (int k = 0; k < n; ++k)
        for (Vertex v = 0; v < n; ++v) {
            for (int t = n - 1; t >= 0; --t) {
                const int var = fresh("rank" + tag({k, v, t}));
                at_least[k][v][t] = var;
                const int here = pos[v][(k + 1 + t) % n];
                c.clauses.push_back({-here, var});
                if (t + 1 < n) {
                    const int above = at_least[k][v][t + 1];
                    c.clauses.push_back({-above, var});
                    c.clauses.push_back({-var, here, above});
                } else {
                    c.clauses.push_back({-var, here});
                }
            }
        }
    // A non-edge xy is served by cut k when no edge joins the ranks up to
    // min(rank x, rank y) with the ranks from max(rank x, rank y) on.
    const auto edges = g.edges();
    for (const auto& [x, y] : g.non_edges()) {
        std::vector<int> choose;
        for (int k = 0; k < n; ++k) {
            const int s = fresh("cut" + tag({x, y, k}));
            choose.push_back(s);
            const auto& rx = at_least[k][x];
            const auto& ry = at_least[k][y];
            for (const auto& [a, b] : edges)
                for (const auto& [u, w] : {std::pair{a, b}, std::pair{b, a}})
                    for (int tu = 0; tu < n; ++tu)
                        for (int tw = tu + 1; tw < n; ++tw) {
                            // u at rank tu with both endpoints at rank >= tu,
                            // w at rank tw with both endpoints at rank <= tw.
                            std::vector<int> clause{-s, -pos[u][(k + 1 + tu) % n], -pos[w][(k + 1 + tw) % n],
                                                    -rx[tu], -ry[tu]};
                            if (tw + 1 < n) {
                                clause.push_back(rx[tw + 1]);
                                clause.push_back(ry[tw + 1]);
                            }
                            c.clauses.push_back(std::move(clause));
                        }
        }
        c.clauses.push_back(std::move(choose));
    }
    return c;
}

std::string write_dimacs(const CnfInstance& c) {
    std::ostringstream out;
    out << "c gap condition CNF\n";
    for (const auto& [name, var] : c.names)
        if (name.rfind("pos_", 0) == 0) out << "c " << var << " " << name << "\n";
    out << "p cnf " << c.num_vars << " " << c.clauses.size() << "\n";
    for (const auto& clause : c.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

CnfInstance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfInstance c;
    long declared = -1;
    std::vector<int> current;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw InputError("DIMACS line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream words(line);
        if (line[0] == 'p') {
            if (declared >= 0) fail("second header");
            std::string p, fmt, extra;
            long vars = -1, clauses = -1;
            if (!(words >> p >> fmt >> vars >> clauses) || p != "p" || fmt != "cnf" || vars < 0 || clauses < 0 ||
                (words >> extra))
                fail("malformed header");
            c.num_vars = static_cast<int>(vars);
            declared = clauses;
            continue;
        }
        if (declared < 0) fail("clause before header");
        std::string tok;
        while (words >> tok) {
            size_t used = 0;
            long lit = 0;
            try {
                lit = std::stol(tok, &used);
            } catch (const std::exception&) {
                fail("bad literal '" + tok + "'");
            }
            if (used != tok.size()) fail("bad literal '" + tok + "'");
            if (lit == 0) {
                c.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::labs(lit) > c.num_vars) fail("literal out of range");
            current.push_back(static_cast<int>(lit));
        }
    }
    if (declared < 0) throw InputError("DIMACS: missing header");
    if (!current.empty()) throw InputError("DIMACS: last clause is not terminated");
    if (static_cast<long>(c.clauses.size()) != declared) throw InputError("DIMACS: clause count does not match header");
    return c;
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        case SolveStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

// Chronological-backtracking DPLL over two watched literals.
class Dpll {
public:
    explicit Dpll(const CnfInstance& c) : n_(c.num_vars), clauses_(c.clauses), value_(c.num_vars + 1, -1) {
        watches_.resize(2 * (n_ + 1));
        for (size_t i = 0; i < clauses_.size(); ++i) {
            auto& cl = clauses_[i];
            std::sort(cl.begin(), cl.end());
            cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
            bool tautology = false;
            for (size_t k = 0; k + 1 < cl.size(); ++k)
                for (size_t l = k + 1; l < cl.size(); ++l) tautology |= cl[k] == -cl[l];
            if (tautology) continue;
            if (cl.empty()) {
                trivially_unsat_ = true;
            } else if (cl.size() == 1) {
                units_.push_back(cl[0]);
            } else {
                watches_[slot(cl[0])].push_back(static_cast<int>(i));
                watches_[slot(cl[1])].push_back(static_cast<int>(i));
            }
        }
    }

    SolveResult solve(std::uint64_t max_conflicts) {
        SolveResult r;
        if (trivially_unsat_) return r;
        for (int lit : units_)
            if (!assign(lit)) return r;
        if (!propagate()) return r;
        for (;;) {
            const int var = pick();
            if (var == 0) {
                r.status = SolveStatus::Sat;
                r.model.assign(n_ + 1, false);
                for (int v = 1; v <= n_; ++v) r.model[v] = value_[v] == 1;
                return r;
            }
            ++r.decisions;
            levels_.push_back({trail_.size(), var, false});
            assign(var);
            while (!propagate()) {
                ++r.conflicts;
                if (max_conflicts && r.conflicts > max_conflicts) {
                    r.status = SolveStatus::BudgetExceeded;
                    return r;
                }
                while (!levels_.empty() && levels_.back().flipped) {
                    undo_to(levels_.back().trail_size);
                    levels_.pop_back();
                }
                if (levels_.empty()) return r;
                auto& top = levels_.back();
                undo_to(top.trail_size);
                top.flipped = true;
                assign(-top.var);
            }
        }
    }

private:
    struct Level {
        size_t trail_size;
        int var;
        bool flipped;
    };

    static size_t slot(int lit) { return 2 * static_cast<size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0); }
    int lit_value(int lit) const {
        const int v = value_[std::abs(lit)];
        if (v < 0) return -1;
        return (lit > 0) == (v == 1) ? 1 : 0;
    }
    bool assign(int lit) {
        const int cur = lit_value(lit);
        if (cur == 0) return false;
        if (cur == 1) return true;
        value_[std::abs(lit)] = lit > 0 ? 1 : 0;
        trail_.push_back(lit);
        return true;
    }
    void undo_to(size_t size) {
        while (trail_.size() > size) {
            value_[std::abs(trail_.back())] = -1;
            trail_.pop_back();
        }
        head_ = std::min(head_, size);
    }
    int pick() {
        for (int v = 1; v <= n_; ++v)
            if (value_[v] < 0) return v;
        return 0;
    }

    bool propagate() {
        while (head_ < trail_.size()) {
            const int falsified = -trail_[head_++];
            auto& list = watches_[slot(falsified)];
            for (size_t i = 0; i < list.size();) {
                auto& cl = clauses_[list[i]];
                if (cl[0] == falsified) std::swap(cl[0], cl[1]);
                if (lit_value(cl[0]) == 1) {
                    ++i;
                    continue;
                }
                bool moved = false;
                for (size_t k = 2; k < cl.size(); ++k)
                    if (lit_value(cl[k]) != 0) {
                        std::swap(cl[1], cl[k]);
                        watches_[slot(cl[1])].push_back(list[i]);
                        list[i] = list.back();
                        list.pop_back();
                        moved = true;
                        break;
                    }
                if (moved) continue;
                if (!assign(cl[0])) return false;
                ++i;
            }
        }
        return true;
    }

    int n_;
    std::vector<std::vector<int>> clauses_;
    std::vector<int> value_;
    std::vector<std::vector<int>> watches_;
    std::vector<int> units_;
    std::vector<int> trail_;
    std::vector<Level> levels_;
    size_t head_ = 0;
    bool trivially_unsat_ = false;
};

}  // namespace

SolveResult solve_cnf(const CnfInstance& c, std::uint64_t max_conflicts) { return Dpll(c).solve(max_conflicts); }

// --------------------------------------------------------------- catalog

CatalogCheck parse_catalog_check(const std::string& s) {
    if (s == "gap" || s == "gap-search") return CatalogCheck::Gap;
    if (s == "regular" || s == "regular-search") return CatalogCheck::Regular;
    if (s == "both") return CatalogCheck::Both;
    throw InputError("unknown catalog check '" + s + "'");
}

namespace {

json catalog_record(std::uint64_t line, const std::string& text, const CatalogOptions& opts) {
    json r{{"line", line}};
    Graph g;
    try {
        g = parse_graph6(text);
    } catch (const InputError& e) {
        r["error"] = e.what();
        return r;
    }
    r["graph6"] = text;
    r["n"] = g.order();
    r["m"] = g.size();
    if (g.order() < opts.min_n || g.order() > opts.max_n || (opts.connected_only && !is_connected(g))) {
        r["skipped"] = "filter";
        return r;
    }
    SearchOptions so;
    so.budget = opts.budget;
    auto strip = [&](json j) {
        if (!opts.timing) j.erase("seconds");
        j.erase("witnesses");
        return j;
    };
    try {
        if (opts.check != CatalogCheck::Regular) r["gap"] = strip(to_json(search_gap_order(g, so)));
        if (opts.check != CatalogCheck::Gap) r["regular"] = strip(to_json(search_regular_order(g, so)));
    } catch (const std::exception& e) {
        r["error"] = e.what();
    }
    return r;
}

}  // namespace

std::uint64_t run_catalog(std::istream& in, std::ostream& out, const CatalogOptions& opts) {
    std::vector<std::pair<std::uint64_t, std::string>> work;
    std::string line;
    for (std::uint64_t idx = 0; std::getline(in, line); ++idx) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (idx < opts.start_line || line.empty()) continue;
        work.emplace_back(idx, line);
    }
    std::vector<std::string> records(work.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < work.size(); i = next++)
            records[i] = catalog_record(work[i].first, work[i].second, opts).dump();
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& r : records) out << r << "\n";
    return records.size();
}

}  // namespace oor

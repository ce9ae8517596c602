#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "oor/constructors.hpp"
#include "oor/decompositions.hpp"
#include "oor/gap_search.hpp"
#include "oor/generators.hpp"
#include "oor/graph6.hpp"
#include "oor/verifier.hpp"

using namespace oor;
using json = nlohmann::json;

namespace {

enum Exit { Positive = 0, Negative = 1, Failure = 2, Undecided = 3 };

struct GraphSource {
    std::string graph6, graph6_file, named;

    void attach(CLI::App* app) {
        auto* a = app->add_option("--graph6", graph6, "graph6 string");
        auto* b = app->add_option("--graph6-file", graph6_file, "file whose first graph6 line is used");
        auto* c = app->add_option("--named", named, "named graph, e.g. petersen or wheel:6");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }
    bool given() const { return !graph6.empty() || !graph6_file.empty() || !named.empty(); }

    Graph load() const {
        if (!named.empty()) return named_graph(named);
        if (!graph6.empty()) return parse_graph6(graph6);
        if (!graph6_file.empty()) {
            std::ifstream in(graph6_file);
            if (!in) throw InputError("cannot read " + graph6_file);
            std::string line;
            while (std::getline(in, line)) {
                if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
                if (!line.empty()) return parse_graph6(line);
            }
            throw InputError(graph6_file + " holds no graph");
        }
        throw InputError("no graph given (use --graph6, --graph6-file or --named)");
    }
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::istringstream words(tok);
        for (std::string w; words >> w;) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(w, &used);
            } catch (const std::exception&) {
                throw InputError("bad integer '" + w + "'");
            }
            if (used != w.size()) throw InputError("bad integer '" + w + "'");
            out.push_back(v);
        }
    }
    return out;
}

CircularOrder parse_order(const std::string& text, int n) {
    CircularOrder order(parse_int_list(text));
    if (order.size() != n) throw InputError("order has " + std::to_string(order.size()) + " vertices, graph has " + std::to_string(n));
    return order;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Placement load_placement(const std::string& path) {
    const auto doc = read_json(path);
    return placement_from_json(doc.contains("placement") ? doc.at("placement") : doc);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

Placement place_order(const CircularOrder& order, const std::string& mode, std::uint64_t seed) {
    if (mode == "regular") return regular_placement(order);
    if (mode == "cocircular") return cocircular_placement(order, false, seed);
    if (mode == "generic") return cocircular_placement(order, true, seed);
    throw InputError("placement mode must be regular, cocircular or generic for this class");
}

// ------------------------------------------------------------------ render

std::string render_svg(const Graph& g, const Placement& pl, const VerificationReport* report) {
    std::vector<std::pair<double, double>> xy;
    auto push = [&](const RatPoint& p) { xy.emplace_back(p[0].convert_to<double>(), p[1].convert_to<double>()); };
    if (pl.is_rational())
        for (const auto& p : pl.rational_points()) push(affine_approx(p));
    else
        for (const auto& p : pl.regular_points()) push(affine_approx(p));
    double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
    if (!xy.empty()) {
        lo_x = hi_x = xy[0].first;
        lo_y = hi_y = xy[0].second;
    }
    for (const auto& [x, y] : xy) {
        lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double size = 480, margin = 40, scale = size / span;
    // y grows upwards in the drawing, downwards in SVG.
    auto sx = [&](double x) { return margin + (x - lo_x) * scale; };
    auto sy = [&](double y) { return margin + (hi_y - y) * scale; };
    std::set<std::pair<Vertex, Vertex>> failing;
    if (report)
        for (const auto& f : report->failures) failing.insert({std::min(f.u, f.v), std::max(f.u, f.v)});

    std::ostringstream svg;
    svg.precision(6);
    const double w = (hi_x - lo_x) * scale + 2 * margin, h = (hi_y - lo_y) * scale + 2 * margin;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h << "\">\n";
    if (report && report->valid) svg << "<rect width=\"100%\" height=\"100%\" fill=\"#eef3fb\"/>\n";
    svg << "<g id=\"non-edges\" fill=\"none\" stroke-dasharray=\"4 3\">\n";
    for (const auto& [u, v] : g.non_edges()) {
        const bool bad = failing.count({u, v}) > 0;
        svg << "<line class=\"" << (bad ? "failing" : "non-edge") << "\" x1=\"" << sx(xy[u].first) << "\" y1=\""
            << sy(xy[u].second) << "\" x2=\"" << sx(xy[v].first) << "\" y2=\"" << sy(xy[v].second) << "\" stroke=\""
            << (bad ? "#d62728" : "#999999") << "\" stroke-width=\"" << (bad ? 2 : 1) << "\"/>\n";
    }
    svg << "</g>\n<g id=\"edges\" stroke=\"#1f3a68\" stroke-width=\"2\">\n";
    for (const auto& [u, v] : g.edges())
        svg << "<line class=\"edge\" x1=\"" << sx(xy[u].first) << "\" y1=\"" << sy(xy[u].second) << "\" x2=\""
            << sx(xy[v].first) << "\" y2=\"" << sy(xy[v].second) << "\"/>\n";
    svg << "</g>\n";
    if (report) {
        svg << "<g id=\"witnesses\" fill=\"#2ca02c\">\n";
        for (const auto& wit : report->witnesses)
            svg << "<circle class=\"witness\" cx=\"" << sx(wit.x) << "\" cy=\"" << sy(wit.y) << "\" r=\"2.5\"/>\n";
        svg << "</g>\n";
    }
    svg << "<g id=\"vertices\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (Vertex v = 0; v < static_cast<Vertex>(xy.size()); ++v)
        svg << "<circle class=\"vertex\" cx=\"" << sx(xy[v].first) << "\" cy=\"" << sy(xy[v].second)
            << "\" r=\"5\" fill=\"white\" stroke=\"black\"/><text x=\"" << sx(xy[v].first) + 7 << "\" y=\""
            << sy(xy[v].second) - 7 << "\">" << v << "</text>\n";
    svg << "</g>\n</svg>\n";
    return svg.str();
}

// ---------------------------------------------------------------- commands

struct Options {
    GraphSource graph;
    std::uint64_t seed = 0;
    std::string output;
    // construct
    std::string cls, mode, order;
    int rows = 0, cols = 0, gnk_n = 0, gnk_k = 0;
    bool obstacle = false;
    // verify / render
    std::string placement;
    std::string method = "arrangement";
    bool no_verify = false;
    // search
    bool gap = false, regular = false, sat = false, no_prune = false;
    std::string dimacs;
    std::uint64_t max_nodes = 0, max_conflicts = 0, local_search = 0;
    double max_seconds = 0;
    int jobs = 1;
    // catalog
    std::string input, check = "gap";
    std::uint64_t start_line = 0;
    int min_n = 0, max_n = 64;
    bool connected = false, no_timing = false;
};

int cmd_construct(const Options& o) {
    json out{{"class", o.cls}};
    Graph g;
    Placement pl;
    std::optional<CircularOrder> order;
    const std::string mode = o.mode.empty() ? "regular" : o.mode;
    if (o.cls == "two-tree" || o.cls == "partial-two-tree") {
        if (!o.mode.empty() && o.mode != "rational") throw InputError("class " + o.cls + " produces rational placements only");
        g = o.graph.load();
        const auto plan = two_tree_plan(g);
        auto [placement, trace] = construct_two_tree(plan);
        pl = std::move(placement);
        out["steps"] = trace.steps.size();
    } else {
        if (o.cls == "cactus") {
            g = o.graph.load();
            order = construct_cactus_order(g, block_cut_tree(g));
        } else if (o.cls == "grid") {
            if (o.graph.given()) throw InputError("grid takes --rows and --cols, not a graph");
            g = grid_graph(o.rows, o.cols);
            order = construct_grid_order(o.rows, o.cols);
        } else if (o.cls == "outerpath") {
            g = o.graph.load();
            if (o.order.empty()) throw InputError("outerpath needs --order with the Hamiltonian boundary");
            order = construct_outerpath_order(validate_outerpath(g, parse_order(o.order, g.order())));
        } else if (o.cls == "caterpillar-complement") {
            const Graph tree = o.graph.load();
            g = complement(tree);
            order = construct_caterpillar_complement_order(tree);
        } else if (o.cls == "gnk") {
            if (o.graph.given()) throw InputError("gnk takes --n and --k, not a graph");
            g = kn_minus_ck(o.gnk_n, o.gnk_k);
            const auto r = construct_kn_minus_ck_order(o.gnk_n, o.gnk_k);
            order = r.order;
            out["cover"] = r.cover;
        } else if (o.cls == "cnp") {
            g = o.graph.load();
            if (o.order.empty()) throw InputError("cnp needs --order with the certificate");
            order = construct_cnp_order(g, parse_order(o.order, g.order()));
        } else {
            throw InputError("unknown class '" + o.cls + "'");
        }
        pl = place_order(*order, mode, o.seed);
        out["order"] = order->sequence();
    }
    const auto report = verify_oor(g, pl);
    out["graph6"] = write_graph6(g);
    out["placement"] = to_json(pl);
    out["valid"] = report.valid;
    out["reducible"] = report.reducible;
    out["vertices_on_outer_face"] = report.vertices_on_outer_face;
    if (o.obstacle) out["obstacle"] = to_json(materialize_obstacle(g, pl, report));
    emit(out.dump(2) + "\n", o.output);
    return report.valid ? Positive : Negative;
}

int cmd_verify(const Options& o) {
    const Graph g = o.graph.load();
    const Placement pl = load_placement(o.placement);
    VerificationReport report;
    if (o.method == "arrangement") report = verify_oor(g, pl);
    else if (o.method == "gaps") report = verify_convex_gaps(g, pl);
    else throw InputError("method must be arrangement or gaps");
    json out = to_json(report);
    if (o.obstacle && report.valid) out["obstacle"] = to_json(materialize_obstacle(g, pl, report));
    emit(out.dump(2) + "\n", o.output);
    return report.valid ? Positive : Negative;
}

int cmd_gap(const Options& o) {
    const Graph g = o.graph.load();
    if (o.order.empty()) throw InputError("gap needs --order");
    const auto order = parse_order(o.order, g.order());
    const auto r = gap_condition(g, order);
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        json item{{"nonedge", {w.x, w.y}}, {"side", w.side}};
        item["gap"] = w.gap ? json{w.gap->from, w.gap->to} : json(nullptr);
        json all = json::array();
        for (const auto& c : candidate_gaps(g, order, w.x, w.y)) all.push_back({c.from, c.to});
        item["candidates"] = all;
        ws.push_back(item);
    }
    emit(json{{"holds", r.holds}, {"order", order.sequence()}, {"witnesses", ws}}.dump(2) + "\n", o.output);
    return r.holds ? Positive : Negative;
}

int cmd_search(const Options& o) {
    const Graph g = o.graph.load();
    if (!o.dimacs.empty()) emit(write_dimacs(encode_cnf(g)), o.dimacs);
    if (o.sat) {
        const auto c = encode_cnf(g);
        const auto r = solve_cnf(c, o.max_conflicts);
        json out{{"status", to_string(r.status)}, {"variables", c.num_vars}, {"clauses", c.clauses.size()},
                 {"decisions", r.decisions}, {"conflicts", r.conflicts}};
        if (r.status == SolveStatus::Sat) {
            const auto order = c.decode(r.model);
            if (!gap_condition(g, order).holds) throw std::logic_error("decoded order fails the gap condition");
            out["order"] = order.sequence();
        }
        emit(out.dump(2) + "\n", o.output);
        if (r.status == SolveStatus::BudgetExceeded) return Undecided;
        return r.status == SolveStatus::Sat ? Positive : Negative;
    }
    SearchOptions so;
    so.budget = {o.max_nodes, o.max_seconds};
    so.prune = !o.no_prune;
    so.jobs = o.jobs;
    so.local_search_steps = o.local_search;
    so.seed = o.seed;
    const auto r = o.regular ? search_regular_order(g, so) : search_gap_order(g, so);
    json out = to_json(r);
    out["check"] = o.regular ? "regular" : "gap";
    emit(out.dump(2) + "\n", o.output);
    if (r.status == SearchStatus::BudgetExceeded) return Undecided;
    return r.status == SearchStatus::Found ? Positive : Negative;
}

int cmd_catalog(const Options& o) {
    CatalogOptions co;
    co.check = parse_catalog_check(o.check);
    co.budget = {o.max_nodes, o.max_seconds};
    co.start_line = o.start_line;
    co.min_n = o.min_n;
    co.max_n = o.max_n;
    co.connected_only = o.connected;
    co.timing = !o.no_timing;
    co.jobs = o.jobs;
    std::ostringstream out;
    if (o.input.empty() || o.input == "-") {
        run_catalog(std::cin, out, co);
    } else {
        std::ifstream in(o.input);
        if (!in) throw InputError("cannot read " + o.input);
        run_catalog(in, out, co);
    }
    emit(out.str(), o.output);
    return Positive;
}

int cmd_render(const Options& o) {
    const Graph g = o.graph.load();
    const Placement pl = load_placement(o.placement);
    if (pl.size() != g.order()) throw InputError("placement size does not match the graph");
    std::optional<VerificationReport> report;
    if (!o.no_verify) report = verify_oor(g, pl);
    emit(render_svg(g, pl, report ? &*report : nullptr), o.output);
    return Positive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outside-obstacle representations: construct, verify, search, render."};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "seed for cocircular perturbations and local search");

    auto* construct = app.add_subcommand("construct", "build a representation for a known graph class");
    construct
        ->add_option("--class", o.cls,
                     "two-tree, partial-two-tree, cactus, grid, outerpath, caterpillar-complement, gnk or cnp")
        ->required();
    construct->add_option("--mode", o.mode, "regular (default), cocircular or generic; rational for 2-trees");
    construct->add_option("--order", o.order, "boundary order (outerpath) or certificate (cnp)");
    construct->add_option("--rows", o.rows);
    construct->add_option("--cols", o.cols);
    construct->add_option("--n", o.gnk_n);
    construct->add_option("--k", o.gnk_k);
    construct->add_flag("--obstacle", o.obstacle, "also emit an obstacle polygon");

    auto* verify = app.add_subcommand("verify", "decide whether a placement is a representation");
    verify->add_option("--placement", o.placement, "placement JSON (or construct output)")->required();
    verify->add_option("--method", o.method, "arrangement (default) or gaps");
    verify->add_flag("--obstacle", o.obstacle, "also emit an obstacle polygon when valid");

    auto* gap = app.add_subcommand("gap", "check the gap condition for one circular order");
    gap->add_option("--order", o.order, "comma separated circular order")->required();

    auto* search = app.add_subcommand("search", "search circular orders");
    auto* by_gap = search->add_flag("--gap", o.gap, "gap condition search (default)");
    auto* by_regular = search->add_flag("--regular", o.regular, "regular polygon representation search");
    auto* by_sat = search->add_flag("--sat", o.sat, "CNF encoding with the internal solver");
    by_gap->excludes(by_regular)->excludes(by_sat);
    by_regular->excludes(by_sat);
    search->add_option("--dimacs", o.dimacs, "write the CNF encoding to this file");
    search->add_option("--max-conflicts", o.max_conflicts, "solver conflict budget (0 = none)");
    search->add_flag("--no-prune", o.no_prune);
    search->add_option("--local-search", o.local_search, "annealing moves before backtracking (gap search)");

    auto* catalog = app.add_subcommand("catalog", "run a search over a graph6 catalog, one JSON line per graph");
    catalog->add_option("--input", o.input, "graph6 file, - for stdin");
    catalog->add_option("--check", o.check, "gap, regular or both");
    catalog->add_option("--start-line", o.start_line, "resume from this 0-based line");
    catalog->add_option("--min-n", o.min_n);
    catalog->add_option("--max-n", o.max_n);
    catalog->add_flag("--connected", o.connected, "skip disconnected graphs");
    catalog->add_flag("--no-timing", o.no_timing, "omit timings for byte-stable output");

    auto* render = app.add_subcommand("render", "draw a placement as SVG");
    render->add_option("--placement", o.placement, "placement JSON (or construct output)")->required();
    render->add_flag("--no-verify", o.no_verify, "skip the verifier overlay");

    for (auto* sub : {construct, verify, gap, search, catalog, render})
        sub->add_option("-o,--output", o.output, "output path (default stdout)");
    for (auto* sub : {construct, verify, gap, search, render}) o.graph.attach(sub);
    for (auto* sub : {search, catalog}) {
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--max-nodes", o.max_nodes, "search node budget (0 = none)");
        sub->add_option("--max-seconds", o.max_seconds, "time budget per search (0 = none)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Failure;
    }

    try {
        if (*construct) return cmd_construct(o);
        if (*verify) return cmd_verify(o);
        if (*gap) return cmd_gap(o);
        if (*search) return cmd_search(o);
        if (*catalog) return cmd_catalog(o);
        if (*render) return cmd_render(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Failure;
    }
    return Failure;
}

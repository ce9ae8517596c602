#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oor/circular_order.hpp"
#include "oor/graph.hpp"

namespace oor {

/// A gap between consecutive vertices `from` and `to` (to = successor of from).
struct Gap {
    Vertex from = -1, to = -1;
    bool operator==(const Gap& o) const { return from == o.from && to == o.to; }
};

/// Candidate gap chosen for one non-edge, if any. `side` is 0 when the gap
/// lies on the clockwise walk from x to y, 1 on the walk from y to x.
struct GapWitness {
    Vertex x = -1, y = -1;
    std::optional<Gap> gap;
    int side = -1;
};

struct GapConditionResult {
    bool holds = false;
    std::vector<GapWitness> witnesses;
};

/// Gaps between x and y on either side with no edge joining the stretch from
/// the near endpoint to the gap with the stretch from the gap to the far
/// endpoint. Throws InputError if xy is an edge or the sizes differ.
std::vector<Gap> candidate_gaps(const Graph& g, const CircularOrder& order, Vertex x, Vertex y);

GapConditionResult gap_condition(const Graph& g, const CircularOrder& order);

/// Number of canonical circular orders of n vertices: vertex 0 first and the
/// second vertex smaller than the last. (n-1)!/2 for n >= 3, else 1.
std::uint64_t canonical_order_count(int n);

/// Visits every canonical order in lexicographic order until `visit` returns
/// false.
void for_each_canonical_order(int n, const std::function<bool(const CircularOrder&)>& visit);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };
std::string to_string(SearchStatus s);

struct SearchBudget {
    /// Limit on search tree nodes; 0 means unlimited.
    std::uint64_t max_nodes = 0;
    /// Wall-clock limit in seconds; 0 means unlimited.
    double max_seconds = 0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<CircularOrder> order;
    std::vector<GapWitness> witnesses;
    /// Canonical orders decided, including those cut off by pruning.
    std::uint64_t orders = 0;
    std::uint64_t nodes = 0;
    /// Regular search only: orders passing the gap condition, and how many of
    /// those were handed to the verifier.
    std::uint64_t gap_survivors = 0;
    std::uint64_t verified = 0;
    /// Local search moves spent before backtracking.
    std::uint64_t local_steps = 0;
    double seconds = 0;
};

nlohmann::json to_json(const SearchOutcome& o);

struct SearchOptions {
    SearchBudget budget;
    /// Prune partial orders whose placed vertices already violate the gap
    /// condition.
    bool prune = true;
    /// Worker threads; the search splits on the second vertex.
    int jobs = 1;
    /// Gap search only: annealing moves tried before backtracking (0 = off).
    /// A hit is re-checked exactly; exhaustion still needs the full search.
    std::uint64_t local_search_steps = 0;
    std::uint64_t seed = 0;
};

/// Canonical order satisfying the gap condition, if any.
SearchOutcome search_gap_order(const Graph& g, const SearchOptions& opts = {});

/// Canonical order whose regular polygon placement verifies as a
/// representation. Orders failing the gap condition are skipped unverified.
/// Throws InputError below 3 vertices.
SearchOutcome search_regular_order(const Graph& g, const SearchOptions& opts = {});

// ------------------------------------------------------------------ CNF

struct CnfInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    /// Readable name -> variable index (1-based).
    std::map<std::string, int> names;
    /// position_var[v][i]: vertex v sits at position i; empty when the
    /// instance did not come from encode_cnf.
    std::vector<std::vector<int>> position_var;

    /// Order from a satisfying assignment (model[var] for var in 1..num_vars).
    CircularOrder decode(const std::vector<bool>& model) const;
};

/// Satisfiable iff some circular order satisfies the gap condition. Throws
/// InputError for n < 3.
CnfInstance encode_cnf(const Graph& g);

std::string write_dimacs(const CnfInstance& c);
/// Strict DIMACS reader: comments, one "p cnf V C" header, exactly C
/// zero-terminated clauses with literals in range. Throws InputError.
CnfInstance parse_dimacs(const std::string& text);

enum class SolveStatus { Sat, Unsat, BudgetExceeded };
std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    /// Indexed by variable; entry 0 unused.
    std::vector<bool> model;
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
};

/// DPLL with unit propagation; `max_conflicts` 0 means unlimited.
SolveResult solve_cnf(const CnfInstance& c, std::uint64_t max_conflicts = 0);

// --------------------------------------------------------------- catalog

enum class CatalogCheck { Gap, Regular, Both };
CatalogCheck parse_catalog_check(const std::string& s);

struct CatalogOptions {
    CatalogCheck check = CatalogCheck::Gap;
    SearchBudget budget;
    /// Lines before this 0-based offset are skipped (resume support).
    std::uint64_t start_line = 0;
    int min_n = 0, max_n = 64;
    bool connected_only = false;
    bool timing = true;
    int jobs = 1;
};

/// One JSON record per graph6 line; unparsable lines yield an error record.
/// Returns the number of records written.
std::uint64_t run_catalog(std::istream& in, std::ostream& out, const CatalogOptions& opts);

}  // namespace oor

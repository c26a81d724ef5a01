#pragma once

#include <cstdint>

#include "treecodes/codes.hpp"
#include "treecodes/graph.hpp"

namespace treecodes {

/// Tuning knobs for the exact solver.
struct SolveOptions {
  /// Abort exploration after this many search nodes. Exceeding it never
  /// throws; the result is flagged and carries the best code found.
  long long node_budget = 100'000'000;

  /// Seed the search with all forced vertices plus, for each group of k
  /// leaves on a common support, the k-1 lowest-numbered ones. Sound:
  /// swapping two such leaves is an automorphism, so some minimum code
  /// (in fact the numerically smallest one) contains exactly these picks.
  bool seed_forced_and_twins = true;

  /// Post-process the witness to the numerically smallest minimum code
  /// (reading a set as an n-bit integer with vertex v worth 2^v), making
  /// witnesses reproducible across machines and search orders.
  bool lex_min_witness = true;
};

/// Result of an exact minimum identifying code computation.
struct SolveResult {
  /// Minimum code size; when budget_exceeded is set this is only the size
  /// of the best valid code found, an upper bound.
  int optimum = 0;
  CodeCertificate witness;
  long long nodes_explored = 0;
  bool budget_exceeded = false;
};

/// Computes a minimum identifying code by iterative deepening over the code
/// size with constraint-propagation pruning. Handles disconnected graphs.
/// Throws NotIdentifiable when two vertices share a closed neighborhood and
/// DomainError for graphs on more than 64 vertices.
SolveResult min_identifying_code(const Graph& g, const SolveOptions& opts = {});

/// Result of a feasibility search at a fixed size budget.
struct BoundedSearchResult {
  bool found = false;  ///< a valid code of size <= the budget exists
  VertexSet code;
  /// True when the search space was exhausted, so found == false proves
  /// that no code of size <= the budget exists. With found == false and
  /// complete == false, nothing is proven (the node budget ran out).
  bool complete = false;
  long long nodes = 0;
};

/// Searches for any identifying code of size at most `size_budget`.
BoundedSearchResult bounded_code_search(const Graph& g, int size_budget,
                                        const SolveOptions& opts = {});

/// Result of a minimum domination computation.
struct DominationResult {
  int size = 0;
  VertexSet witness;
};

/// Minimum dominating set of a tree by dynamic programming over a rooted
/// orientation; linear time, deterministic witness. Throws NotATree.
DominationResult min_dominating_set_tree(const Graph& g);

/// Minimum dominating set of any graph by exhaustive search, smallest
/// numeric witness; guard: at most 20 vertices (DomainError beyond).
DominationResult min_dominating_set_exact(const Graph& g);

/// Domination number of the n-vertex path: ceil(n/3). Throws DomainError
/// for n < 1.
int gamma_path(int n);

/// Minimum identifying code size of the n-vertex path: floor(n/2) + 1.
/// Throws DomainError for n < 1 and for n == 2 (the two-vertex path has no
/// identifying code).
int gamma_id_path(int n);

/// Oracle: minimum identifying code by subset enumeration in numeric order
/// (so the witness is the numerically smallest minimum code), validated
/// with the all-pairs reference check. Independent of the branch-and-bound
/// path; guard: at most 20 vertices. Throws NotIdentifiable when no code
/// exists.
CodeCertificate min_identifying_code_exhaustive(const Graph& g);

}  // namespace treecodes

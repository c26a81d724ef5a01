#pragma once

#include <string>
#include <vector>

#include "treecodes/graph.hpp"
#include "treecodes/rational.hpp"

namespace treecodes {

/// One enumerated tree measured against the two bounds. `key` is the
/// canonical shape key, so (n, key) identifies the isomorphism class and
/// orders the report deterministically.
struct BoundReport {
  int n = 0;
  std::string key;
  int max_degree = 0;
  int leaf_count = 0;
  int support_count = 0;
  int gamma = 0;     ///< domination number
  int gamma_id = 0;  ///< minimum identifying code size
  bool has_main = false;     ///< maximum degree >= 3, so the degree bound applies
  Rational main_target = 0;  ///< (D-1)n/D
  Rational slack = 0;        ///< gamma_id - main_target; positive only when attaining
  int dom_target = 0;        ///< n - gamma
  std::string label;         ///< exceptional classification, "" when none
  std::string verdict;       ///< "ok", "tight", "excluded" or "VIOLATION"
  long long nodes = 0;       ///< solver search nodes spent on this tree
};

struct VerificationSummary {
  std::string theorem;  ///< "main" or "domination"
  int n_min = 0, n_max = 0;
  long long trees_total = 0;    ///< trees enumerated in the range
  long long trees_checked = 0;  ///< trees in the theorem's scope
  long long tight = 0;          ///< attaining (main) resp. excluded (domination) trees
  long long violations = 0;
  bool exceptional_set_matches = true;  ///< found attainers == predicted catalog (main)
  bool ok = false;
  /// Totals for diagnostics; deliberately absent from format_report so the
  /// rendered report stays byte-identical across machines and worker counts.
  long long nodes_total = 0;
  double wall_seconds = 0.0;
};

struct VerifyResult {
  VerificationSummary summary;
  std::vector<BoundReport> reports;  ///< sorted by (n, key); identical for any worker count
};

/// Exhaustively checks, over every tree with n_min <= n <= n_max and
/// maximum degree >= 3, that the minimum identifying code size stays within
/// (D-1)n/D except exactly on the predicted trees, which exceed it by
/// exactly 1/D. Range limited to [4, 16]; `workers` threads split the
/// enumeration with identical output.
VerifyResult verify_main_theorem(int n_min, int n_max, int workers = 1);

/// Exhaustively checks gamma_id <= n - gamma over every tree with
/// n_min <= n <= n_max (range [3, 16]), the four-vertex path excluded.
VerifyResult verify_domination_theorem(int n_min, int n_max, int workers = 1);

/// Deterministic text rendering: no timing, no worker-dependent content.
std::string format_report(const VerifyResult& result);

/// Writes format_report to a file; throws Error when the file cannot be
/// written.
void write_report(const std::string& path, const VerifyResult& result);

}  // namespace treecodes

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treecodes/codes.hpp"
#include "treecodes/graph.hpp"

namespace treecodes {

/// Bookkeeping for one star-append step.
struct AppendRecord {
  int base_vertex = -1;       ///< host vertex the new center attaches to
  int star_degree = 0;        ///< degree of the new center (>= 3)
  int universal_vertex = -1;  ///< label of the new center (old order)
  std::vector<int> new_leaves;
};

struct AppendResult {
  Graph graph;
  AppendRecord record;
};

/// Attaches a star to `base_vertex`: a new center u (labeled n) adjacent to
/// the base plus star_degree - 1 fresh leaves (labeled n+1, ...), so u ends
/// with degree star_degree. Throws DegreeDomain for star_degree < 3.
AppendResult append_star(const Graph& g, int base_vertex, int star_degree);

/// Lifts an identifying code across one star append: the base code plus all
/// fresh leaves identifies the extended graph, unconditionally. Throws
/// InvalidInputCertificate when the certificate is not valid or does not
/// match the record.
CodeCertificate extend_code_through_star(const Graph& appended, const CodeCertificate& base,
                                         const AppendRecord& record);

/// A generated graph together with a certified reference identifying code.
struct FamilyInstance {
  std::string name;
  Graph graph;
  VertexSet reference_code;
};

/// The star K_{1,d}: center 0, leaves 1..d; code = the leaves. d >= 2.
FamilyInstance star(int d);

/// Two adjacent degree-d centers (0 and d), each with d-1 leaves; the code
/// is the 2d-2 leaves. d >= 3.
FamilyInstance double_star(int d);

/// Path 0..k-1 with a pendant two-edge tail i - x_i - y_i on every path
/// vertex; the code takes each path vertex and each x_i (2k = 2n/3
/// vertices). k >= 1.
FamilyInstance two_corona(int k);

/// The 13-vertex subcubic tree of even diameter 8 whose minimum identifying
/// code has size 8 < 2n/3 + 1/3.
FamilyInstance graph_z();

/// Degree-d amalgam on a path of t blocks: each path vertex carries one
/// subdivided star (via a degree-2 middle vertex) and d-3 direct stars,
/// every star center of degree d with d-1 leaves. Order t((d-2)d + 2); the
/// code takes every leaf and every path vertex, t((d-2)(d-1) + 1) in all.
/// close_path joins the path ends into a cycle (same code; no longer a
/// tree). Requires d >= 4 and t >= 3 (t >= 4 when closed).
FamilyInstance big_construction(int t, int d, bool close_path = false);

/// Complete (d-1)-ary tree of height h >= 1 in breadth-first labeling:
/// every internal vertex has d-1 children, so internal degrees are d.
/// The reference code is the domination-bound builder's output. d >= 3.
FamilyInstance complete_ary(int d, int h);

/// A base star K_{1,base_degree} extended by a sequence of star appends
/// (vertex, degree); the code is the base star's leaves plus every appended
/// star's leaves, lifted step by step.
FamilyInstance appended_star(int base_degree,
                             const std::vector<std::pair<int, int>>& appends);

/// The i-th of the twelve subcubic trees attaining the maximum-degree bound
/// with equality, i in 0..11, ordered by construction (orders 4, 7, 7, 10,
/// 10, 10, 13, 13, 16, 16, 19, 22).
FamilyInstance exceptional_t3(int i);

/// All twelve, cached.
const std::vector<FamilyInstance>& exceptional_catalog();

/// Dispatch by family name for the command line: kind in {"star",
/// "double_star", "two_corona", "graph_z", "big_construction",
/// "complete_ary", "appended_star", "exceptional"} with numeric parameters
/// in construction order. Throws DomainError for unknown kinds or bad
/// parameter counts.
FamilyInstance generate_family(const std::string& kind, const std::vector<long long>& params);

/// Names which tree family attaining the maximum-degree bound this tree
/// belongs to: "T0".."T11" for the twelve subcubic ones, "star(d)" for
/// K_{1,d} with d >= 4, "" otherwise. Throws NotATree, and DegreeDomain
/// when the maximum degree is below 3 (no such tree exists there).
std::string classify_exceptional(const Graph& g);

/// A certified minimum identifying code of the n-vertex path with vertices
/// labeled 0..n-1 in path order: size floor(n/2) + 1. Throws DomainError
/// for n < 1 and n == 2.
VertexSet path_identifying_code(int n);

/// Constructive witness for the maximum-degree bound: a certified code of
/// size at most floor((D-1)n/D) for trees with maximum degree D >= 3 that
/// do not attain the bound, the exact optimum ((D-1)n + 1)/D for the trees
/// that do, and the exact optimum for paths. Throws NotATree, and
/// DomainError for the two-vertex path (it has no identifying code).
CodeCertificate construct_main_bound_code(const Graph& g);

/// Constructive witness for the domination bound: a certified code of size
/// at most n - gamma(T). Throws NotATree, DomainError for orders below 3,
/// and ExcludedInstance for the four-vertex path, the unique tree where no
/// such code exists.
CodeCertificate construct_domination_bound_code(const Graph& g);

}  // namespace treecodes

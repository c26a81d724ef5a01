#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treecodes/graph.hpp"

namespace treecodes {

/// Canonical form of a tree: two trees are isomorphic iff their forms are
/// equal. The byte string lists vertex depths in preorder of the canonical
/// arrangement (root depth 0), so it doubles as a compact shape key.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  /// Two lowercase hex digits per byte; lexicographic order on hex strings
  /// matches byte order, so the key sorts cleanly in text reports.
  std::string hex() const;

  bool operator==(const CanonicalForm& o) const { return bytes_ == o.bytes_; }
  bool operator!=(const CanonicalForm& o) const { return bytes_ != o.bytes_; }
  bool operator<(const CanonicalForm& o) const { return bytes_ < o.bytes_; }

 private:
  std::string bytes_;
};

/// The one or two middle vertices of a tree (peeling leaves until <= 2
/// remain). Throws NotATree.
std::vector<int> tree_centers(const Graph& g);

/// Canonical form of a tree; throws NotATree otherwise.
CanonicalForm canonical_form(const Graph& g);

/// Permutation realizing the canonical arrangement: entry i is the original
/// vertex placed at canonical position i. Relabeling through it maps
/// isomorphic trees to the identical labeled graph.
std::vector<int> canonical_order(const Graph& g);

/// True when both graphs are trees with equal canonical forms.
bool is_isomorphic(const Graph& a, const Graph& b);

/// An explicit isomorphism: a vector m with m[v in a] = image in b, or
/// nullopt when the trees are not isomorphic.
std::optional<std::vector<int>> tree_isomorphism(const Graph& a, const Graph& b);

}  // namespace treecodes

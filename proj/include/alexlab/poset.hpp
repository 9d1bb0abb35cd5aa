#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexlab/errors.hpp"

namespace alexlab {

// A finite poset, equivalently a finite T0 Alexandroff space.  Instances are
// immutable after construction; the strict-order closure, heights and cover
// lists are computed once and cached.  Elements are referenced by index in
// label insertion order, or by label.
class Poset {
 public:
  using CoverList = std::vector<std::pair<std::string, std::string>>;

  Poset() = default;

  // Strict constructor: validates labels and the cover relation.
  // The cover list must be irredundant (a transitive reduction) and acyclic;
  // violations raise DuplicateLabel / UnknownEndpoint / CycleDetected /
  // RedundantCover.
  static Poset validated(std::vector<std::string> labels, const CoverList& covers);

  // Convenience constructor for builders: accepts an arbitrary strict-order
  // relation (pairs a < b), closes it transitively and keeps only covers.
  static Poset from_relations(std::vector<std::string> labels, const CoverList& relations);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // throws UnknownElement
  std::optional<int> try_index(const std::string& label) const;
  bool contains(const std::string& label) const { return try_index(label).has_value(); }

  const std::vector<int>& upper_covers(int i) const { return up_covers_[i]; }
  const std::vector<int>& lower_covers(int i) const { return low_covers_[i]; }
  CoverList cover_pairs() const;  // label pairs (lower, upper), sorted

  // Strict comparison in the order closure.
  bool less(int a, int b) const { return test_bit(below_[b], a); }
  bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }

  // U_x = {y : y <= x} and F_x = {y : y >= x}, as sorted index lists.
  std::vector<int> down_set(int x) const;
  std::vector<int> up_set(int x) const;
  std::vector<std::string> down_set(const std::string& x) const;
  std::vector<std::string> up_set(const std::string& x) const;

  int height(int x) const { return height_[x]; }
  int height(const std::string& x) const { return height_[index_of(x)]; }
  int max_height() const;

  // (E_x, S_x): number of lower covers and upper covers.
  std::pair<int, int> degree_pair(int x) const;
  std::pair<int, int> degree_pair(const std::string& x) const;

  std::vector<int> minimal_points() const;
  std::vector<int> maximal_points() const;

  // Number of strictly comparable pairs a < b.
  long long relation_count() const;

  // Induced subposet on the given (sorted, distinct) indices.  The induced
  // order is re-reduced, so covers may appear that were not covers before.
  Poset subposet(const std::vector<int>& keep) const;
  Poset erased(int x) const;

  // Copy with every label run through prefix + label.
  Poset prefixed(const std::string& prefix) const;

  bool same_labels(const Poset& other) const { return labels_ == other.labels_; }

 private:
  using Bits = std::vector<std::uint64_t>;
  static bool test_bit(const Bits& b, int i) {
    return (b[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  static void set_bit(Bits& b, int i) {
    b[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void build_closure();  // from validated cover lists

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> up_covers_, low_covers_;
  std::vector<Bits> below_, above_;  // strict closure bitsets
  std::vector<int> height_;

  friend class PosetBuilder;
};

// Ordered non-Hausdorff join: every point of `lower` sits below every point
// of `upper`.  Labels must be disjoint; on clash both sides are prefixed
// ("j0:" upper, "j1:" lower).
Poset non_hausdorff_join(const Poset& upper, const Poset& lower);

// Order-isomorphism search (invariant refinement + backtracking).  Returns a
// bijection p-index -> q-index, or nullopt.  Deterministic: the first match
// in index order.  Throws SearchBudgetExceeded past caps.max_iso_nodes.
std::optional<std::vector<int>> poset_isomorphic(const Poset& p, const Poset& q,
                                                 const Caps& caps = default_caps());

}  // namespace alexlab

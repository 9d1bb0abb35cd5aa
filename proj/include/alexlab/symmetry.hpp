#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alexlab/group.hpp"
#include "alexlab/homotopy.hpp"
#include "alexlab/poset.hpp"

namespace alexlab {

// A group of order automorphisms of a fixed carrier poset.  perms[0] is the
// identity; the element list is sorted lexicographically, so equal groups
// compare equal.  The composition table is materialized on demand.
struct PermGroup {
  Poset carrier;
  std::vector<std::vector<int>> perms;

  std::size_t order() const { return perms.size(); }
  int identity_index() const { return 0; }
  int index_of_perm(const std::vector<int>& perm) const;  // -1 if absent
  int compose(int i, int j) const;          // index of perms[i] o perms[j]
  int inverse(int i) const;
  std::vector<std::vector<int>> composition_table() const;
  int perm_order(int i) const;
  std::vector<int> order_profile() const;   // sorted element orders
};

// Full automorphism group via invariant partition refinement plus
// backtracking.  Enumeration is deterministic (label index order).
// Errors: SearchBudgetExceeded if |p| > caps.max_aut_points or the group
// grows past caps.max_group_order.
PermGroup automorphism_group(const Poset& p, const Caps& caps = default_caps());

struct EquivalenceResult {
  PermGroup group;        // E(p) = Aut(core(p)), carrier is the core
  Retraction retraction;  // the retraction used to compute the core
};

// Self-homotopy-equivalence classes of p.
EquivalenceResult equivalence_group(const Poset& p, const Caps& caps = default_caps());

struct TauResult {
  PermGroup aut;          // Aut(p)
  PermGroup equiv;        // E(p) on core(p)
  Retraction retraction;
  std::vector<int> map;   // tau: index into aut.perms -> index into equiv.perms
};

// Comparison homomorphism tau: Aut(p) -> E(p), phi |-> [r o phi|_core].
// Verified to be well-defined and a homomorphism.
TauResult tau_map(const Poset& p, const Caps& caps = default_caps());

// Which elements of tau.aut map to the identity class.
std::vector<int> tau_kernel(const TauResult& t);

// Group isomorphism test between a concrete permutation group and an
// abstract table group (|g| <= 5040): order profile pruning + generator
// image backtracking.  Returns h-element -> perm-index, or nullopt.
std::optional<std::vector<int>> isomorphic_to(const PermGroup& g, const FiniteGroup& h);

// For canonically labeled constructions (column labels "(g3,s1)" etc.),
// reads off the unique t with phi(g', alpha) = (t g', alpha) on the given
// side ("g" or "h").  Errors: NotCanonicallyLabeled if no such columns,
// InconsistentAction if phi is not of that shape.
int canonical_action_decode(const Poset& p, const std::vector<int>& phi,
                            const FiniteGroup& g, const std::string& side);

}  // namespace alexlab

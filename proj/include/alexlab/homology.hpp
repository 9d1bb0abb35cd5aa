#pragma once

#include <memory>
#include <string>
#include <vector>

#include "alexlab/complex.hpp"
#include "alexlab/poset.hpp"
#include "alexlab/symmetry.hpp"

namespace alexlab {

struct DegreeHomology {
  int degree = 0;
  long long betti = 0;
  std::vector<long long> torsion;  // divisibility-ordered, each > 1
};

// Reduced integral homology of a complex, all degrees 0..dim, plus the
// f-vector and the Euler characteristic cross-check.
struct HomologySummary {
  std::vector<DegreeHomology> reduced;
  std::vector<long long> f_vector;
  long long euler = 1;  // unreduced
  bool euler_consistent = true;

  bool all_trivial() const;
  const DegreeHomology* degree(int d) const;
};

// Exact integer homology.  Internally: elementary simplicial collapses
// shrink the complex (homotopy-type preserving), then Smith normal form on
// the remainder.  No floating point anywhere.
HomologySummary homology(const SimplicialComplex& k, const Caps& caps = default_caps());

HomologySummary poset_homology(const Poset& p, const Caps& caps = default_caps());

struct WedgeCheck {
  bool is_wedge_of_circles = false;  // reduced homology Z^k in degree 1 only
  long long circles = 0;             // k; 0 means weakly contractible
  HomologySummary summary;
};
WedgeCheck wedge_of_circles_check(const Poset& p, const Caps& caps = default_caps());

// Shared machinery for induced actions on homology: builds K(p) once,
// records the collapse, and keeps the Smith data needed to express mapped
// cycles in the chosen homology basis.
class HomologyContext {
 public:
  explicit HomologyContext(const Poset& p, const Caps& caps = default_caps());
  ~HomologyContext();
  HomologyContext(HomologyContext&&) noexcept;

  const HomologySummary& summary() const;

  // Matrix of the chain map K(phi) on the chosen basis of the free part of
  // reduced H_d; square and invertible (phi must be an automorphism of p).
  std::vector<std::vector<long long>> action(const std::vector<int>& phi, int degree);

  // True iff the action is the identity in every degree with free rank > 0.
  bool action_trivial(const std::vector<int>& phi);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<std::vector<long long>> homology_action(const Poset& p,
                                                    const std::vector<int>& phi, int degree,
                                                    const Caps& caps = default_caps());

struct TrivialActionSubgroup {
  PermGroup equiv;                 // E(p), carrier = core(p)
  std::vector<int> members;        // indices into equiv.perms with trivial action
  bool is_subgroup = false;
  bool is_normal = false;
};

// E_*(p): classes acting trivially on all homology of the core.
TrivialActionSubgroup homologically_trivial_action_subgroup(const Poset& p,
                                                            const Caps& caps = default_caps());

}  // namespace alexlab

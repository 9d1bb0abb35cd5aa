#pragma once

#include <string>
#include <vector>

#include "alexlab/complex.hpp"
#include "alexlab/group.hpp"
#include "alexlab/homotopy.hpp"
#include "alexlab/poset.hpp"

namespace alexlab {

// Realization constructions.  Label scheme (stable, machine-parseable):
//   column points     "(g2,-1)" "(g2,0)" "(g2,s1)" ... (side prefix g or h)
//   glue point        "*"
//   loop gadgets      "A@(h0,0)" ... "J@(h1,s1)"   (Hp for the paper-став H)
//   fence variants    "x1@(h0,0)" / "y1@(h0,0)"
//   tail chains       "w@(h1,2)"  (2nd point of the chain over A@(h1,0))
//   rigid blocks      "x1".."x17" standalone, "x3@Wcopy2" as decoration
//   apex              "t"

// X_*^G: prescribed homeomorphism group G, trivial equivalence classes.
// |X| = |G|(|S'|+2) + 1.  Errors: TrivialGroup.
Poset build_x_star_g(const FiniteGroup& g);

// X_H^*: prescribed self-equivalence classes H, trivial automorphisms.
Poset build_x_h_star(const FiniteGroup& h);

// X_H^G: the two halves glued at "*".  A trivial factor delegates to the
// other half; both trivial is an error.
Poset build_x_h_g(const FiniteGroup& g, const FiniteGroup& h);

// Removes every loop-fence gadget point labeled E/F/G/Hp/I/J@... and
// re-reduces; the economical variant of the same space.
Poset strip_t_gadgets(const Poset& x);

// X_{H_n}^G: the 6-point loop fence replaced by the stretched fence with
// 2(n+3) points (n >= 0 reproduces the original at n = 0).
Poset build_t_n_variant(const FiniteGroup& g, const FiniteGroup& h, int n);

// X_f for a homomorphism f: G -> H: realizes tau = f.  W-chains dropped;
// covers A@(h,0) > (g,0) when f(g) = h, and A@(h,0) > * when h is outside
// the image.
Poset build_x_f(const GroupHom& f);

// The 9-point rigid block (beat-point free, weakly contractible,
// non-contractible), labeled x1..x9 to match the collapse narrative.
Poset w_building_block();

// W_n: n copies of the block chained tail-to-head (x_{8k+1} shared);
// 8n+1 points, no beat points, trivial homology, collapsible.
Poset build_w(int n);

// Minimal finite models of S^1 (4 points) and S^2 (6 points).
Poset minimal_sphere_model(int dim);

// Face poset: simplices ordered by inclusion, covers = codimension 1.
Poset face_poset(const SimplicialComplex& k);

struct Thm13Result {
  Poset space;
  Poset reduced_model;                    // the model after beat/weak-beat reduction
  std::vector<RemovalStep> model_reduction;
};

// Full pipeline: rigidify the face-poset-style model with W_i blocks at its
// points, attach (X_H^G join W_2), and bridge with the apex "t".
Thm13Result build_thm13(const Poset& model, const FiniteGroup& g, const FiniteGroup& h);

}  // namespace alexlab

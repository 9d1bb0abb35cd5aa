#pragma once

#include <string>
#include <vector>

#include "alexlab/errors.hpp"
#include "alexlab/poset.hpp"

namespace alexlab {

// Abstract simplicial complex over labeled vertices.  cells holds every
// nonempty simplex as a sorted vertex-index list, grouped by dimension and
// sorted lexicographically within a dimension (deterministic).
struct SimplicialComplex {
  std::vector<std::string> vertex_labels;
  std::vector<std::vector<std::vector<int>>> cells;  // cells[d] = d-simplices

  // Validates: vertex indices in range, sorted simplices, no duplicates,
  // downward closure (NotAComplex otherwise).
  static SimplicialComplex from_cells(std::vector<std::string> vertex_labels,
                                      std::vector<std::vector<int>> simplices);

  // Expands facets to their downward closure; ComplexTooLarge past the cap.
  static SimplicialComplex from_facets(std::vector<std::string> vertex_labels,
                                       std::vector<std::vector<int>> facets,
                                       std::size_t max_cells = 1000000);

  int dim() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t cell_count() const;
  std::vector<long long> f_vector() const;
  long long euler() const;  // unreduced Euler characteristic
  bool has_cell(const std::vector<int>& s) const;
};

// McCord order complex K(p): one d-simplex per (d+1)-chain of p.
// Throws ComplexTooLarge if more than caps.max_simplices cells arise.
SimplicialComplex order_complex(const Poset& p, const Caps& caps = default_caps());

// Simplicial join (vertex sets concatenated, lower factor second).
SimplicialComplex simplicial_join(const SimplicialComplex& upper,
                                  const SimplicialComplex& lower,
                                  std::size_t max_cells = 10000000);

}  // namespace alexlab

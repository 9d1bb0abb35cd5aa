#pragma once

#include <string>
#include <vector>

#include "alexlab/errors.hpp"

namespace alexlab {

// Abstract finite group given by its Cayley table.  Element 0 is the
// identity; table[a][b] is the product a*b.  The generator list is the
// well-ordered generating set S' used by the realization constructions
// (never contains the identity; list order is the well-order).
struct FiniteGroup {
  int n = 1;
  std::vector<std::vector<int>> table;
  std::vector<int> generators;

  // Validates shape, Latin-square property, identity at 0, associativity
  // (Light's test over the generators) and that the generators generate.
  static FiniteGroup validated(std::vector<std::vector<int>> table,
                               std::vector<int> generators,
                               std::size_t max_order = 5040);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup klein4() { return product(cyclic(2), cyclic(2)); }
  static FiniteGroup symmetric3();
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  int mult(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;
  int element_order(int a) const;
  std::vector<int> order_profile() const;  // sorted element orders
  bool is_trivial() const { return n == 1; }
};

// Group homomorphism f: source -> target, as an image table.
struct GroupHom {
  FiniteGroup source, target;
  std::vector<int> map;

  // Checks f(0)=0, ranges, and f(ab)=f(a)f(b); otherwise NotAHomomorphism.
  static GroupHom validated(FiniteGroup source, FiniteGroup target, std::vector<int> map);

  int image_size() const;
  bool surjective() const { return image_size() == target.n; }
};

}  // namespace alexlab

#include "alexlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace alexlab {

FiniteGroup FiniteGroup::validated(std::vector<std::vector<int>> table,
                                   std::vector<int> generators, std::size_t max_order) {
  FiniteGroup g;
  g.n = static_cast<int>(table.size());
  require(g.n >= 1, Err::InvalidInput, "empty multiplication table");
  require(static_cast<std::size_t>(g.n) <= max_order, Err::GroupTooLarge,
          "group order " + std::to_string(g.n));
  for (auto& row : table)
    require(static_cast<int>(row.size()) == g.n, Err::InvalidInput, "ragged multiplication table");
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      require(table[a][b] >= 0 && table[a][b] < g.n, Err::InvalidInput, "table entry out of range");
  // Identity at 0, Latin square.
  for (int a = 0; a < g.n; ++a) {
    require(table[0][a] == a && table[a][0] == a, Err::InvalidInput, "identity must be element 0");
    std::vector<bool> seen_row(g.n, false), seen_col(g.n, false);
    for (int b = 0; b < g.n; ++b) {
      require(!seen_row[table[a][b]], Err::InvalidInput, "row is not a permutation");
      require(!seen_col[table[b][a]], Err::InvalidInput, "column is not a permutation");
      seen_row[table[a][b]] = seen_col[table[b][a]] = true;
    }
  }
  g.table = std::move(table);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (int s : generators)
    require(s >= 1 && s < g.n, Err::InvalidInput, "generator index out of range (identity excluded)");
  // Generators must generate.
  std::set<int> reached{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (int s : generators) {
      int b = g.table[a][s];
      if (reached.insert(b).second) frontier.push_back(b);
    }
  }
  require(static_cast<int>(reached.size()) == g.n, Err::InvalidInput,
          "generators do not generate the group");
  // Light's associativity test: checking a(bc) = (ab)c for a in a generating
  // set suffices.
  for (int s : generators)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        require(g.table[s][g.table[b][c]] == g.table[g.table[s][b]][c], Err::InvalidInput,
                "table is not associative");
  g.generators = std::move(generators);
  return g;
}

FiniteGroup FiniteGroup::trivial() {
  FiniteGroup g;
  g.n = 1;
  g.table = {{0}};
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  require(n >= 1, Err::InvalidInput, "cyclic group order must be positive");
  FiniteGroup g;
  g.n = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  if (n > 1) g.generators = {1};
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2} in lexicographic order; composition applies the
  // right factor first.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> base{0, 1, 2};
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  FiniteGroup g;
  g.n = 6;
  g.table.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      g.table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  g.generators = {1, 3};  // a transposition and a 3-cycle
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.n = a.n * b.n;
  g.table.assign(g.n, std::vector<int>(g.n));
  auto id = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          g.table[id(x1, y1)][id(x2, y2)] = id(a.table[x1][x2], b.table[y1][y2]);
  for (int s : a.generators) g.generators.push_back(id(s, 0));
  for (int s : b.generators) g.generators.push_back(id(0, s));
  std::sort(g.generators.begin(), g.generators.end());
  return g;
}

int FiniteGroup::inverse(int a) const {
  for (int b = 0; b < n; ++b)
    if (table[a][b] == 0) return b;
  fail(Err::InternalAssertionFailed, "group element without inverse");
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = table[x][a];
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::order_profile() const {
  std::vector<int> out(n);
  for (int a = 0; a < n; ++a) out[a] = element_order(a);
  std::sort(out.begin(), out.end());
  return out;
}

GroupHom GroupHom::validated(FiniteGroup source, FiniteGroup target, std::vector<int> map) {
  require(static_cast<int>(map.size()) == source.n, Err::NotAHomomorphism,
          "image table size mismatch");
  for (int v : map)
    require(v >= 0 && v < target.n, Err::NotAHomomorphism, "image out of range");
  require(map[0] == 0, Err::NotAHomomorphism, "identity must map to identity");
  for (int a = 0; a < source.n; ++a)
    for (int b = 0; b < source.n; ++b)
      require(map[source.table[a][b]] == target.table[map[a]][map[b]], Err::NotAHomomorphism,
              "map does not respect multiplication");
  GroupHom f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.map = std::move(map);
  return f;
}

int GroupHom::image_size() const {
  std::set<int> im(map.begin(), map.end());
  return static_cast<int>(im.size());
}

}  // namespace alexlab

#include "alexlab/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "refine.hpp"

namespace alexlab {

namespace {

// Kahn order over the cover digraph; empty result size marks a cycle.
std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& up) {
  std::vector<int> indeg(n, 0), order;
  for (int v = 0; v < n; ++v)
    for (int w : up[v]) (void)w, ++indeg[w];
  std::set<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : up[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  return order;
}

// Extract one directed cycle for the CycleDetected witness.
std::vector<std::string> find_cycle(const Poset::CoverList&, const std::vector<std::string>& labels,
                                    const std::vector<std::vector<int>>& up) {
  int n = static_cast<int>(labels.size());
  std::vector<int> state(n, 0), parent(n, -1);
  std::vector<std::string> witness;
  for (int s = 0; s < n && witness.empty(); ++s) {
    if (state[s] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, ei] = stack.back();
      if (ei < up[v].size()) {
        int w = up[v][ei++];
        if (state[w] == 1) {
          witness.push_back(labels[w]);
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            witness.push_back(labels[it->first]);
            if (it->first == w) break;
          }
          std::reverse(witness.begin(), witness.end());
          break;
        }
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return witness;
}

}  // namespace

void Poset::build_closure() {
  int n = size();
  std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  below_.assign(n, Bits(words, 0));
  above_.assign(n, Bits(words, 0));
  height_.assign(n, 0);
  auto order = topo_order(n, up_covers_);
  require(static_cast<int>(order.size()) == n, Err::InternalAssertionFailed, "cycle after validation");
  for (int v : order) {
    for (int u : low_covers_[v]) {
      for (std::size_t w = 0; w < words; ++w) below_[v][w] |= below_[u][w];
      set_bit(below_[v], u);
      height_[v] = std::max(height_[v], height_[u] + 1);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (int w : up_covers_[v]) {
      for (std::size_t k = 0; k < below_[v].size(); ++k) above_[v][k] |= above_[w][k];
      set_bit(above_[v], w);
    }
  }
}

static void index_labels(Poset&, const std::vector<std::string>& labels,
                         std::map<std::string, int>& index) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    require(!labels[i].empty(), Err::InvalidInput, "empty element label");
    if (!index.emplace(labels[i], static_cast<int>(i)).second)
      fail(Err::DuplicateLabel, labels[i]);
  }
}

Poset Poset::validated(std::vector<std::string> labels, const CoverList& covers) {
  Poset p;
  p.labels_ = std::move(labels);
  index_labels(p, p.labels_, p.index_);
  int n = p.size();
  p.up_covers_.assign(n, {});
  p.low_covers_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : covers) {
    auto ia = p.try_index(a), ib = p.try_index(b);
    if (!ia) fail(Err::UnknownEndpoint, a);
    if (!ib) fail(Err::UnknownEndpoint, b);
    if (*ia == *ib) fail(Err::CycleDetected, "self relation at " + a, {a, a});
    if (!seen.insert({*ia, *ib}).second)
      fail(Err::RedundantCover, "duplicate cover " + a + " < " + b, {a, b});
    p.up_covers_[*ia].push_back(*ib);
    p.low_covers_[*ib].push_back(*ia);
  }
  for (auto& v : p.up_covers_) std::sort(v.begin(), v.end());
  for (auto& v : p.low_covers_) std::sort(v.begin(), v.end());
  if (static_cast<int>(topo_order(n, p.up_covers_).size()) != n) {
    auto witness = find_cycle(covers, p.labels_, p.up_covers_);
    fail(Err::CycleDetected, "cover relation has a cycle", witness);
  }
  p.build_closure();
  // A cover list is valid only if it is its own transitive reduction.
  for (int a = 0; a < n; ++a)
    for (int b : p.up_covers_[a])
      for (std::size_t w = 0; w < p.below_[b].size(); ++w)
        if (p.above_[a][w] & p.below_[b][w])
          fail(Err::RedundantCover,
               "cover " + p.labels_[a] + " < " + p.labels_[b] + " is implied by the rest",
               {p.labels_[a], p.labels_[b]});
  return p;
}

Poset Poset::from_relations(std::vector<std::string> labels, const CoverList& relations) {
  Poset raw;
  raw.labels_ = std::move(labels);
  index_labels(raw, raw.labels_, raw.index_);
  int n = raw.size();
  raw.up_covers_.assign(n, {});
  raw.low_covers_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : relations) {
    auto ia = raw.try_index(a), ib = raw.try_index(b);
    if (!ia) fail(Err::UnknownEndpoint, a);
    if (!ib) fail(Err::UnknownEndpoint, b);
    if (*ia == *ib) fail(Err::CycleDetected, "self relation at " + a, {a, a});
    if (seen.insert({*ia, *ib}).second) {
      raw.up_covers_[*ia].push_back(*ib);
      raw.low_covers_[*ib].push_back(*ia);
    }
  }
  for (auto& v : raw.up_covers_) std::sort(v.begin(), v.end());
  for (auto& v : raw.low_covers_) std::sort(v.begin(), v.end());
  if (static_cast<int>(topo_order(n, raw.up_covers_).size()) != n) {
    auto witness = find_cycle(relations, raw.labels_, raw.up_covers_);
    fail(Err::CycleDetected, "relation has a cycle", witness);
  }
  raw.build_closure();
  // Keep covers only: a < b with nothing strictly between.
  Poset p;
  p.labels_ = raw.labels_;
  p.index_ = raw.index_;
  p.up_covers_.assign(n, {});
  p.low_covers_.assign(n, {});
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (!raw.less(a, b)) continue;
      bool between = false;
      for (std::size_t w = 0; w < raw.below_[b].size() && !between; ++w)
        if (raw.above_[a][w] & raw.below_[b][w]) between = true;
      if (!between) {
        p.up_covers_[a].push_back(b);
        p.low_covers_[b].push_back(a);
      }
    }
  }
  for (auto& v : p.up_covers_) std::sort(v.begin(), v.end());
  for (auto& v : p.low_covers_) std::sort(v.begin(), v.end());
  p.build_closure();
  return p;
}

int Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(Err::UnknownElement, label);
  return it->second;
}

std::optional<int> Poset::try_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Poset::CoverList Poset::cover_pairs() const {
  CoverList out;
  for (int a = 0; a < size(); ++a)
    for (int b : up_covers_[a]) out.push_back({labels_[a], labels_[b]});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Poset::down_set(int x) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (i == x || less(i, x)) out.push_back(i);
  return out;
}

std::vector<int> Poset::up_set(int x) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (i == x || less(x, i)) out.push_back(i);
  return out;
}

std::vector<std::string> Poset::down_set(const std::string& x) const {
  std::vector<std::string> out;
  for (int i : down_set(index_of(x))) out.push_back(labels_[i]);
  return out;
}

std::vector<std::string> Poset::up_set(const std::string& x) const {
  std::vector<std::string> out;
  for (int i : up_set(index_of(x))) out.push_back(labels_[i]);
  return out;
}

int Poset::max_height() const {
  int h = 0;
  for (int i = 0; i < size(); ++i) h = std::max(h, height_[i]);
  return h;
}

std::pair<int, int> Poset::degree_pair(int x) const {
  return {static_cast<int>(low_covers_[x].size()), static_cast<int>(up_covers_[x].size())};
}

std::pair<int, int> Poset::degree_pair(const std::string& x) const {
  return degree_pair(index_of(x));
}

std::vector<int> Poset::minimal_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (low_covers_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_covers_[i].empty()) out.push_back(i);
  return out;
}

long long Poset::relation_count() const {
  long long c = 0;
  for (int b = 0; b < size(); ++b)
    for (const auto word : below_[b]) c += __builtin_popcountll(word);
  return c;
}

Poset Poset::subposet(const std::vector<int>& keep) const {
  int m = static_cast<int>(keep.size());
  for (int i = 1; i < m; ++i)
    require(keep[i - 1] < keep[i], Err::InvalidInput, "subposet indices must be sorted distinct");
  for (int i : keep)
    require(i >= 0 && i < size(), Err::InvalidInput, "subposet index out of range");
  Poset p;
  p.labels_.reserve(m);
  for (int i : keep) p.labels_.push_back(labels_[i]);
  for (int i = 0; i < m; ++i) p.index_.emplace(p.labels_[i], i);
  // Induced order, re-reduced: cover iff less with nothing kept in between.
  std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  std::vector<Bits> lo(m, Bits(words, 0)), hi(m, Bits(words, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (less(keep[j], keep[i])) {
        set_bit(lo[i], j);
        set_bit(hi[j], i);
      }
  p.up_covers_.assign(m, {});
  p.low_covers_.assign(m, {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!test_bit(lo[j], i)) continue;
      bool between = false;
      for (std::size_t w = 0; w < words && !between; ++w)
        if (hi[i][w] & lo[j][w]) between = true;
      if (!between) {
        p.up_covers_[i].push_back(j);
        p.low_covers_[j].push_back(i);
      }
    }
  p.build_closure();
  return p;
}

Poset Poset::erased(int x) const {
  std::vector<int> keep;
  keep.reserve(size() - 1);
  for (int i = 0; i < size(); ++i)
    if (i != x) keep.push_back(i);
  return subposet(keep);
}

Poset Poset::prefixed(const std::string& prefix) const {
  Poset p = *this;
  p.index_.clear();
  for (int i = 0; i < p.size(); ++i) {
    p.labels_[i] = prefix + p.labels_[i];
    p.index_.emplace(p.labels_[i], i);
  }
  return p;
}

Poset non_hausdorff_join(const Poset& upper, const Poset& lower) {
  bool clash = false;
  for (const auto& l : lower.labels())
    if (upper.contains(l)) clash = true;
  const Poset& u = clash ? upper.prefixed("j0:") : upper;
  const Poset& l = clash ? lower.prefixed("j1:") : lower;

  std::vector<std::string> labels = u.labels();
  labels.insert(labels.end(), l.labels().begin(), l.labels().end());
  Poset::CoverList covers;
  for (auto& c : u.cover_pairs()) covers.push_back(c);
  for (auto& c : l.cover_pairs()) covers.push_back(c);
  for (int m : l.maximal_points())
    for (int b : u.minimal_points()) covers.push_back({l.label(m), u.label(b)});
  return Poset::validated(labels, covers);
}

std::optional<std::vector<int>> poset_isomorphic(const Poset& p, const Poset& q,
                                                 const Caps& caps) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.size() == 0) return std::vector<int>{};
  return detail::find_isomorphism(p, q, caps.max_iso_nodes, /*all=*/nullptr);
}

}  // namespace alexlab

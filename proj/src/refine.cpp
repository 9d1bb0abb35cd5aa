#include "refine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "alexlab/homotopy.hpp"

namespace alexlab::detail {

namespace {

struct NodeRef {
  const Poset* g;
  int v;
};

std::vector<long long> initial_keys(const Poset& g) {
  // Weak-beat flags are strong invariants but cost a contractibility test
  // per point; include them only on small carriers.
  std::vector<bool> dw(g.size(), false), uw(g.size(), false);
  if (g.size() <= 60) {
    auto [down_weak, up_weak] = weak_beat_points(g);
    for (int v : down_weak) dw[v] = true;
    for (int v : up_weak) uw[v] = true;
  }
  std::vector<long long> keys(g.size());
  for (int v = 0; v < g.size(); ++v) {
    long long k = g.height(v);
    k = k * 1024 + static_cast<long long>(g.lower_covers(v).size());
    k = k * 1024 + static_cast<long long>(g.upper_covers(v).size());
    k = k * 2 + (is_down_beat(g, v) ? 1 : 0);
    k = k * 2 + (is_up_beat(g, v) ? 1 : 0);
    k = k * 2 + (dw[v] ? 1 : 0);
    k = k * 2 + (uw[v] ? 1 : 0);
    keys[v] = k;
  }
  return keys;
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> joint_stable_colors(
    const Poset& p, const Poset& q) {
  bool same = &p == &q;
  int np = p.size(), nq = same ? 0 : q.size();

  // Seed colors from per-node invariants, shared id space.
  std::vector<int> cp(np), cq(same ? np : nq);
  {
    std::map<long long, int> ids;
    auto kp = initial_keys(p);
    auto kq = same ? std::vector<long long>{} : initial_keys(q);
    for (auto k : kp) ids.emplace(k, 0);
    for (auto k : kq) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int v = 0; v < np; ++v) cp[v] = ids[kp[v]];
    for (int v = 0; v < nq; ++v) cq[v] = ids[kq[v]];
    if (same) cq = cp;
  }

  using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
  auto signature = [](const Poset& g, const std::vector<int>& col, int v) {
    std::vector<int> lo, hi;
    for (int u : g.lower_covers(v)) lo.push_back(col[u]);
    for (int u : g.upper_covers(v)) hi.push_back(col[u]);
    std::sort(lo.begin(), lo.end());
    std::sort(hi.begin(), hi.end());
    return Sig{col[v], std::move(lo), std::move(hi)};
  };

  int colors = 0;
  for (int round = 0; round <= p.size() + (same ? 0 : q.size()); ++round) {
    std::map<Sig, int> ids;
    std::vector<Sig> sp(np), sq(same ? 0 : nq);
    for (int v = 0; v < np; ++v) sp[v] = signature(p, cp, v), ids.emplace(sp[v], 0);
    for (int v = 0; v < nq; ++v) sq[v] = signature(q, cq, v), ids.emplace(sq[v], 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int v = 0; v < np; ++v) cp[v] = ids[sp[v]];
    for (int v = 0; v < nq; ++v) cq[v] = ids[sq[v]];
    if (same) cq = cp;
    if (next == colors) break;
    colors = next;
  }

  if (!same) {
    std::map<int, int> hp, hq;
    for (int c : cp) ++hp[c];
    for (int c : cq) ++hq[c];
    if (hp != hq) return std::nullopt;
  }
  return std::make_pair(cp, cq);
}

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q,
                                                 std::size_t budget,
                                                 std::vector<std::vector<int>>* all,
                                                 std::size_t group_cap) {
  auto colored = joint_stable_colors(p, q);
  if (!colored) return std::nullopt;
  auto& [cp, cq] = *colored;
  int n = p.size();

  std::map<int, std::vector<int>> classes_q;
  for (int v = 0; v < q.size(); ++v) classes_q[cq[v]].push_back(v);
  std::map<int, int> class_size_p;
  for (int v = 0; v < n; ++v) ++class_size_p[cp[v]];
  for (auto& [c, members] : classes_q)
    if (class_size_p[c] != static_cast<int>(members.size())) return std::nullopt;

  // Most-constrained-first processing order, ties by index (deterministic).
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int sa = class_size_p[cp[a]], sb = class_size_p[cp[b]];
    if (sa != sb) return sa < sb;
    if (cp[a] != cp[b]) return cp[a] < cp[b];
    return a < b;
  });

  std::vector<int> map(n, -1), used(q.size(), 0), assigned;
  assigned.reserve(n);
  std::size_t expansions = 0;

  std::optional<std::vector<int>> found;
  // Iterative DFS over (position, candidate slot) to avoid deep recursion.
  struct Frame {
    int v;
    std::size_t slot;
  };
  std::vector<Frame> stack;
  stack.push_back({order[0], 0});

  auto consistent = [&](int a, int b) {
    for (int c : assigned) {
      int d = map[c];
      if (p.less(a, c) != q.less(b, d)) return false;
      if (p.less(c, a) != q.less(d, b)) return false;
    }
    return true;
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& cands = classes_q[cp[f.v]];
    bool advanced = false;
    while (f.slot < cands.size()) {
      int b = cands[f.slot++];
      if (used[b]) continue;
      if (++expansions > budget)
        fail(Err::SearchBudgetExceeded, "isomorphism search exceeded node budget");
      if (!consistent(f.v, b)) continue;
      map[f.v] = b;
      used[b] = 1;
      assigned.push_back(f.v);
      if (static_cast<int>(assigned.size()) == n) {
        if (all) {
          all->push_back(map);
          if (all->size() > group_cap)
            fail(Err::SearchBudgetExceeded, "automorphism group exceeds size cap");
          used[b] = 0;
          map[f.v] = -1;
          assigned.pop_back();
          continue;
        }
        return map;
      }
      stack.push_back({order[assigned.size()], 0});
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (!stack.empty()) {
        Frame& prev = stack.back();
        used[map[prev.v]] = 0;
        map[prev.v] = -1;
        assigned.pop_back();
      }
    }
  }
  return found;
}

}  // namespace alexlab::detail

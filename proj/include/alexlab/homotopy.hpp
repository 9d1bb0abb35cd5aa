#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexlab/poset.hpp"

namespace alexlab {

enum class BeatKind { DownBeat, UpBeat, DownWeak, UpWeak };

const char* beat_kind_name(BeatKind k);
std::optional<BeatKind> beat_kind_from_name(const std::string& s);

// One recorded point removal; a list of these is a collapse trace.
struct RemovalStep {
  std::string element;
  BeatKind kind;
};

// Strong deformation retraction r: source -> target obtained by composing
// single beat-point removals.  target is the induced subposet on the
// surviving points; map sends each source index to the index (in source) of
// its image, and is the identity on survivors.
struct Retraction {
  Poset source;
  Poset target;
  std::vector<int> map;

  std::string apply(const std::string& label) const {
    return source.label(map[source.index_of(label)]);
  }
};

// (down beat points, up beat points), sorted index lists.  A point may
// appear in both lists.
std::pair<std::vector<int>, std::vector<int>> beat_points(const Poset& p);

bool is_down_beat(const Poset& p, int x);
bool is_up_beat(const Poset& p, int x);

struct CoreResult {
  Poset core;
  Retraction retraction;
  std::vector<RemovalStep> steps;
};

// Stong core: remove beat points (lowest index first) until none remain.
// The result is unique up to isomorphism regardless of removal order.
CoreResult core(const Poset& p);

bool is_contractible(const Poset& p);

// Points whose deleted down-set (resp. up-set) is contractible.  Beat points
// qualify trivially.  Returns (down-weak, up-weak) sorted index lists.
std::pair<std::vector<int>, std::vector<int>> weak_beat_points(const Poset& p);

// Greedy certificate of weak contractibility: beat points to a fixpoint,
// then one weak beat point (lowest index), repeated.  Returns the removal
// trace if a single point remains, nullopt if stuck.
std::optional<std::vector<RemovalStep>> collapse_to_point(const Poset& p);

// Replays a recorded trace, checking each step's claim at the time of
// removal.  Returns nullopt on success, else a description of the first
// invalid step.
std::optional<std::string> replay_collapse(const Poset& p, const std::vector<RemovalStep>& trace);

// Homotopy classification of finite spaces: p ~ q iff core(p) iso core(q).
bool homotopy_equivalent(const Poset& p, const Poset& q, const Caps& caps = default_caps());

}  // namespace alexlab

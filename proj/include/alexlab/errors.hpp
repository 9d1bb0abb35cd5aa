#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace alexlab {

enum class Err {
  DuplicateLabel,
  UnknownEndpoint,
  UnknownElement,
  CycleDetected,
  RedundantCover,
  SearchBudgetExceeded,
  GroupTooLarge,
  TrivialGroup,
  NotAHomomorphism,
  NotCanonicallyLabeled,
  InconsistentAction,
  UnsupportedDimension,
  NotAComplex,
  ComplexTooLarge,
  MatrixBudgetExceeded,
  InternalAssertionFailed,
  InvalidInput,
};

const char* err_name(Err e);

// Single exception type carrying a code plus an optional structured witness
// (e.g. the cycle for CycleDetected, the redundant pair for RedundantCover).
class Error : public std::runtime_error {
 public:
  Error(Err code, std::string msg, std::vector<std::string> witness = {})
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code),
        witness_(std::move(witness)) {}

  Err code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  Err code_;
  std::vector<std::string> witness_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg,
                              std::vector<std::string> witness = {}) {
  throw Error(code, msg, std::move(witness));
}

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Resource caps shared by the search and homology routines.  Defaults follow
// the library contract; the CLI overrides them from flags or the environment
// (ALEXLAB_MAX_AUT, ALEXLAB_MAX_SIMPLICES).
struct Caps {
  std::size_t max_aut_points = 500;        // carrier size cap for Aut search
  std::size_t max_group_order = 1000000;   // cap on |Aut|
  std::size_t max_simplices = 1000000;     // order_complex cell budget
  std::size_t max_iso_nodes = 10000000;    // node expansions in iso search
  std::size_t max_dense_cells = 20000;     // per-degree cells after collapse
};

Caps& default_caps();

}  // namespace alexlab

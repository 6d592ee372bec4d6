#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace termclone {

/// Outcome of an exhaustive check: pass/fail, the first counterexample
/// found, and how many cases were covered.
template <class Witness>
struct Report {
  bool pass = true;
  std::optional<Witness> counterexample;
  std::uint64_t checked = 0;

  /// Records the first failure; later ones are ignored.
  Report& fail(Witness w) {
    if (pass) {
      pass = false;
      counterexample = std::move(w);
    }
    return *this;
  }
};

}  // namespace termclone

#pragma once

#include <string>
#include <utility>

namespace descent_lab {

/// Outcome of an exhaustive check; carries the first counterexample on failure.
struct Verdict {
  bool passed = true;
  std::string counterexample;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return passed; }
};

}  // namespace descent_lab

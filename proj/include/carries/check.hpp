#pragma once

#include <string>
#include <utility>

namespace carries {

/// Outcome of one verified identity. `detail` pinpoints the first failing
/// index tuple when ok is false.
struct CheckResult {
  bool ok = true;
  std::string detail;

  static CheckResult pass() { return {true, {}}; }
  static CheckResult fail(std::string what) { return {false, std::move(what)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace carries

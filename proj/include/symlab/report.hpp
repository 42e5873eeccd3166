#ifndef SYMLAB_REPORT_HPP
#define SYMLAB_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symlab {

enum class Verdict { pass, fail, hypothesis_failed };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypothesis_failed: return "hypothesis_failed";
  }
  return "?";
}

/// One inclusion (or equality) that a verifier checked.
struct Check {
  std::string label;
  bool passed = false;
  std::optional<std::string> witness;
};

/// Outcome of a verifier run. `checks` are in evaluation order; `witness`
/// repeats the first failing check's witness.
struct Report {
  std::string claim;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> parameters;
  Verdict verdict = Verdict::pass;
  std::vector<Check> checks;
  std::optional<std::string> witness;
  double wall_time_ms = 0;

  bool passed() const { return verdict == Verdict::pass; }

  void add(Check c) {
    if (!c.passed && verdict == Verdict::pass) {
      verdict = Verdict::fail;
      witness = c.witness;
    }
    checks.push_back(std::move(c));
  }
};

class Stopwatch {
public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace symlab

#endif

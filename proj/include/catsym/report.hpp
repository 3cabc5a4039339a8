#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catsym {

enum class Verdict { Pass, Fail, Absent, Budget };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Absent: return "ABSENT";
    case Verdict::Budget: return "BUDGET";
  }
  return "?";
}

// Outcome of a law check. On failure `law` names the first violated law and
// `witness` lists (role, display name) pairs pinning the counterexample.
struct Report {
  Verdict verdict = Verdict::Pass;
  std::string law;
  std::vector<std::pair<std::string, std::string>> witness;
  std::string note;

  bool ok() const { return verdict == Verdict::Pass; }
  explicit operator bool() const { return ok(); }

  static Report pass(std::string note = {}) {
    Report r;
    r.note = std::move(note);
    return r;
  }
  static Report fail(std::string law,
                     std::vector<std::pair<std::string, std::string>> witness,
                     std::string note = {}) {
    return Report{Verdict::Fail, std::move(law), std::move(witness), std::move(note)};
  }
  static Report with(Verdict v, std::string note) {
    Report r;
    r.verdict = v;
    r.note = std::move(note);
    return r;
  }

  // Prefixes the violated law, used when one check delegates to another.
  Report nested(std::string_view prefix) const {
    Report r = *this;
    if (!r.ok()) r.law = std::string(prefix) + ": " + r.law;
    return r;
  }

  std::string summary() const {
    std::string s(to_string(verdict));
    if (!law.empty()) s += " " + law;
    for (const auto& [role, name] : witness) s += " " + role + "=" + name;
    if (!note.empty()) s += " (" + note + ")";
    return s;
  }
};

}  // namespace catsym

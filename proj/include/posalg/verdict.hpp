#pragma once

#include <string>
#include <vector>

namespace posalg {

enum class Status { Holds, Fails, Inconclusive };

// Counterexample payload: which identity broke, at which basis indices,
// with the two disagreeing values in serialized form.
struct Witness {
  std::string identity;
  std::vector<long> indices;
  std::string lhs;
  std::string rhs;
};

// Tri-state check result. Fails always carries a witness; Holds never does.
// Inconclusive exists because positivity recognition is NP-complete in
// general; the tiers that decide every object in this workbench are named
// in the notes.
struct Verdict {
  Status status = Status::Inconclusive;
  std::vector<Witness> witnesses;
  std::string notes;

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }

  static Verdict pass(std::string notes = "") {
    return Verdict{Status::Holds, {}, std::move(notes)};
  }
  static Verdict fail(Witness w, std::string notes = "") {
    return Verdict{Status::Fails, {std::move(w)}, std::move(notes)};
  }
  static Verdict unknown(std::string notes) {
    return Verdict{Status::Inconclusive, {}, std::move(notes)};
  }
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    default: return "inconclusive";
  }
}

}  // namespace posalg

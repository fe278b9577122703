#pragma once

#include "divlat/element.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace divlat {

enum class Status : std::uint8_t {
  HoldsOnFrame,
  HoldsGlobally,          // frame check passed and backend closed form asserts it everywhere
  Fails,                  // genuine refutation; witness is replayable
  FrameInsufficient,
  HypothesisFailed,       // a gated statement whose hypothesis is false here
  ExpectedCounterexample, // converse probe refuted on a backend violating the hypothesis
};

std::string_view status_name(Status s);

struct Verdict {
  Status status = Status::HoldsOnFrame;
  std::vector<Element> witness;
  std::uint64_t checked_count = 0;
  std::string note;

  static Verdict holds(std::uint64_t checked, std::string note = {}) {
    return {Status::HoldsOnFrame, {}, checked, std::move(note)};
  }
  static Verdict fails(std::vector<Element> witness, std::uint64_t checked, std::string note = {}) {
    return {Status::Fails, std::move(witness), checked, std::move(note)};
  }
  static Verdict insufficient(std::uint64_t checked, std::string note = {}) {
    return {Status::FrameInsufficient, {}, checked, std::move(note)};
  }
  static Verdict hypothesis_failed(std::uint64_t checked, std::string note = {}) {
    return {Status::HypothesisFailed, {}, checked, std::move(note)};
  }

  bool holds() const { return status == Status::HoldsOnFrame || status == Status::HoldsGlobally; }
  bool failed() const { return status == Status::Fails; }
  /// True when the verdict says something definite (holds or fails).
  bool decisive() const { return holds() || failed(); }
};

/// Accumulates a quantified check: counts instances and keeps the first
/// counterexample in evaluation order.
class Tally {
public:
  void pass() { ++checked_; }
  /// Records a failing instance; returns false so loops can stop early.
  bool fail(std::vector<Element> witness, std::string note = {}) {
    ++checked_;
    if (!failure_) {
      failure_ = true;
      witness_ = std::move(witness);
      note_ = std::move(note);
    }
    return false;
  }
  bool check(bool ok, std::vector<Element> witness, std::string note = {}) {
    if (ok) {
      pass();
      return true;
    }
    return fail(std::move(witness), std::move(note));
  }
  bool failed() const { return failure_; }
  std::uint64_t checked() const { return checked_; }
  Verdict verdict(std::string holds_note = {}) const {
    if (failure_) return Verdict::fails(witness_, checked_, note_);
    return Verdict::holds(checked_, std::move(holds_note));
  }

private:
  bool failure_ = false;
  std::uint64_t checked_ = 0;
  std::vector<Element> witness_;
  std::string note_;
};

} // namespace divlat

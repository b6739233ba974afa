#pragma once

#include <stdexcept>
#include <string>

namespace twoblock {

// Machine-readable error codes. CLI output and the JSON error format carry
// the name string, so renaming a code is a breaking change.
enum class Errc {
  ParseError,
  VertexOutOfRange,
  LoopArc,
  TwoCycle,
  DuplicateArc,
  NotAPath,
  SpecOutOfRange,
  DifferentStart,
  SharedInterior,
  InsufficientBlocks,
  EvenOrder,
  BadJumpSet,
  Unsatisfiable,
  AttemptsExhausted,
  TooManyVertices,
  BudgetExhausted,
  ThresholdNotMet,
  RestartLimit,
  CaseAnalysisExhausted,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

// Raised when the case analysis reaches a state the embedding argument rules
// out. With a certified-maximum path and the degree threshold met this is
// unreachable, so any occurrence is a bug report carrying the full scene.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, std::string scene_json)
      : Error(Errc::CaseAnalysisExhausted, what), scene_(std::move(scene_json)) {}

  // JSON snapshot of graph, spec and search state for triage.
  const std::string& scene() const { return scene_; }

 private:
  std::string scene_;
};

}  // namespace twoblock

#pragma once

#include <stdexcept>
#include <string>

namespace vecgames {

enum class Errc {
  // core_api
  MissingAgentAction,
  OutOfSpaceAction,
  SteppedTerminalEnv,
  ActionGivenForTerminatedAgent,
  UnknownAgent,
  // concepts
  LengthMismatch,
  ShapeMismatch,
  InvalidJointAction,
  UtilityCountMismatch,
  EmptyReturns,
  InvalidWeights,
  // indicators
  DimensionMismatch,
  EmptyFront,
  EmptyWeights,
  // wrappers
  IndexOutOfRange,
  WeightLengthMismatch,
  UnsupportedSpace,
  // stateless envs
  InvalidLimits,
  IllegalMineChoice,
  InvalidRoute,
  // grid envs
  InvalidAction,
  // continuous envs
  OutOfBoxAction,
  SizeMismatch,
  // board envs
  FullColumn,
  GameOver,
  IllegalMove,
  GroupTooSmall,
  // learners
  NonDiscreteObservation,
  NonDiscreteAction,
  NotTeamReward,
  InvalidCounts,
  SpaceTooLarge,
  // cli
  ConfigInvalid,
  FileInvalid,
  RuntimeFailure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace vecgames

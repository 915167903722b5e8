#pragma once

#include <stdexcept>
#include <string>

namespace rgsched {

/// Library error codes. Mirrored one-to-one by the C API status values.
enum class Err : int {
  Ok = 0,
  InvalidParams,
  ParseError,
  InvalidDistribution,
  InvalidAlpha,
  ConditionOnZeroEvent,
  NotCloseForAnyAlpha,
  UnsupportedPair,
  ShiftOutOfRange,
  MassNotNormalized,
  GenerationFailed,
  OrderInversion,
  IncompleteSchedule,
  ScheduleDoesNotCover,
  StateSpaceTooLarge,
  Internal,
};

const char* err_name(Err e);

class RgError : public std::runtime_error {
 public:
  RgError(Err code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw RgError(code, msg);
}

}  // namespace rgsched

#pragma once

#include <stdexcept>
#include <string>

namespace kmw {

enum class Errc {
  NotGcm,
  NotSymmetrizable,
  IndexOutOfRange,
  NotConnected,
  NotSpecial,
  DimensionMismatch,
  RealizationMismatch,
  EqualIndices,
  NotInConeOrUnknown,
  SampleMismatch,
  SampleOverflow,
  UnknownToken,
  NonSpecialTheta,
  UnsupportedFormat,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kmw

#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  Unsupported = 3,
  Overflow = 4,
  CapExceeded = 5,
  Internal = 6,
};

// Single exception type for the core library; the C API maps `code()` onto
// its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fatpoints

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mstlab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Thrown on contract violations at API boundaries; mapped to error codes in
// the C layer.
class Error : public std::runtime_error {
 public:
  enum class Code { invalid_argument, domain, io, internal };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

[[noreturn]] inline void fail_invalid(const std::string& what) {
  throw Error(Error::Code::invalid_argument, what);
}

[[noreturn]] inline void fail_domain(const std::string& what) {
  throw Error(Error::Code::domain, what);
}

[[noreturn]] inline void fail_io(const std::string& what) {
  throw Error(Error::Code::io, what);
}

[[noreturn]] inline void fail_internal(const std::string& what) {
  throw Error(Error::Code::internal, what);
}

}  // namespace mstlab

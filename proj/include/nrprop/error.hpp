#ifndef NRPROP_ERROR_HPP
#define NRPROP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nrprop {

enum class errc {
  invalid_argument,
  length_mismatch,
  degenerate_code,
  not_reduced,
  span_not_ambient,
  coset_system_violation,
  verification_failed,
  io_failure,
  missing_cache,
  unknown_name,
  tier_locked,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Internal consistency check that stays on in release builds.
inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace nrprop

#endif

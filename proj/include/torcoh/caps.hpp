#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torcoh {

inline constexpr const char* kToolVersion = "0.1.0";

// Error taxonomy shared by the C++ core, the C API and the CLI exit codes.
enum class Errc {
  parse = 1,
  validate = 2,
  capacity = 3,
  unsupported = 4,
  bad_argument = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

// Desk-scale guard rails. Every entry point shares one notion of "too big";
// eliminations fail loudly (Errc::capacity) instead of thrashing.
struct Caps {
  std::size_t max_entry_bits = 1'000'000;  // largest intermediate integer in eliminations
  int max_group_order = 12;                // finite-group enumeration cutoff
  int max_bar_length = 4;                  // bar resolution truncation cutoff
  int max_tensor_degree = 8;               // Young-symmetrizer tensor degree cutoff
  int precision_digits = 50;               // significant digits for real-valued reports
};

// Process-wide defaults. precision_digits honours the TORCOH_PRECISION
// environment variable on first use; CLI flags override per run.
Caps& default_caps();

}  // namespace torcoh

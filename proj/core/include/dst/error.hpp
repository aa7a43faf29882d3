#pragma once

#include <stdexcept>
#include <string>

namespace dst {

// Machine-readable failure categories. The CLI prints the stable name of the
// category and exits nonzero; library users can switch on the code.
enum class Errc {
  duplicate_label,
  empty_frame,
  unknown_label,
  duplicate_subset,
  negative_mass,
  sum_out_of_tolerance,
  frame_mismatch,
  off_support_query,
  dogmatic_input,
  not_subnormal,
  not_consonant,
  not_quasi_bayesian,
  not_dual_quasi_bayesian,
  no_unique_minimum,
  size_exceeded,
  cap_exceeded,
  total_conflict,
  infeasible_spec,
  mode_mismatch,
  malformed_document,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }
  const char* category() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dst

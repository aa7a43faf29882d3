#include "dst/error.hpp"

namespace dst {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_label: return "duplicate-label";
    case Errc::empty_frame: return "empty-frame";
    case Errc::unknown_label: return "unknown-label";
    case Errc::duplicate_subset: return "duplicate-subset";
    case Errc::negative_mass: return "negative-mass";
    case Errc::sum_out_of_tolerance: return "sum-out-of-tolerance";
    case Errc::frame_mismatch: return "frame-mismatch";
    case Errc::off_support_query: return "off-support-query";
    case Errc::dogmatic_input: return "dogmatic-input";
    case Errc::not_subnormal: return "not-subnormal";
    case Errc::not_consonant: return "not-consonant";
    case Errc::not_quasi_bayesian: return "not-quasi-bayesian";
    case Errc::not_dual_quasi_bayesian: return "not-dual-quasi-bayesian";
    case Errc::no_unique_minimum: return "no-unique-minimum";
    case Errc::size_exceeded: return "size-exceeded";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::total_conflict: return "total-conflict";
    case Errc::infeasible_spec: return "infeasible-spec";
    case Errc::mode_mismatch: return "mode-mismatch";
    case Errc::malformed_document: return "malformed-document";
    case Errc::io_error: return "io-error";
  }
  return "unknown-error";
}

}  // namespace dst

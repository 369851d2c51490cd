#pragma once

#include <stdexcept>
#include <string>

namespace blf {

enum class errc {
  degenerate_degree,
  non_transitive,
  label_mismatch,
  not_liftable,
  not_isotopic,
  strand_mismatch,
  straddling_cap,
  bad_position,
  not_split,
  nonempty_final_still,
  still_mismatch,
  not_negative_branch,
  fragment_gluing_failed,
  no_compatible_aux_strand,
  not_odd_parity,
  obd_mismatch,
  monodromy_unsupported,
  non_orientable,
  unsupported_word,
  reduction_budget,
  region_out_of_range,
  parse,
  internal
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::degenerate_degree: return "DegenerateDegree";
    case errc::non_transitive: return "NonTransitive";
    case errc::label_mismatch: return "LabelMismatch";
    case errc::not_liftable: return "NotLiftable";
    case errc::not_isotopic: return "NotIsotopic";
    case errc::strand_mismatch: return "StrandMismatch";
    case errc::straddling_cap: return "StraddlingCap";
    case errc::bad_position: return "BadPosition";
    case errc::not_split: return "NotSplit";
    case errc::nonempty_final_still: return "NonemptyFinalStill";
    case errc::still_mismatch: return "StillMismatch";
    case errc::not_negative_branch: return "NotNegativeBranch";
    case errc::fragment_gluing_failed: return "FragmentGluingFailed";
    case errc::no_compatible_aux_strand: return "NoCompatibleAuxStrand";
    case errc::not_odd_parity: return "NotOddParity";
    case errc::obd_mismatch: return "ObdMismatch";
    case errc::monodromy_unsupported: return "MonodromyUnsupported";
    case errc::non_orientable: return "NonOrientable";
    case errc::unsupported_word: return "UnsupportedWord";
    case errc::reduction_budget: return "ReductionBudget";
    case errc::region_out_of_range: return "RegionOutOfRange";
    case errc::parse: return "Parse";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

// Domain error. event_index is set when the failure is tied to a movie event.
class error : public std::runtime_error {
 public:
  error(errc code, std::string msg, int event_index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg +
                           (event_index >= 0
                                ? " (event " + std::to_string(event_index) + ")"
                                : "")),
        code_(code),
        event_index_(event_index) {}

  errc code() const { return code_; }
  int event_index() const { return event_index_; }

 private:
  errc code_;
  int event_index_;
};

}  // namespace blf

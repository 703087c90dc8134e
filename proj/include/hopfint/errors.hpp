#pragma once

#include <stdexcept>
#include <string>

namespace hopfint {

/// Category of a thrown error, used by callers (and the CLI) to map
/// failures onto exit codes and report sections.
enum class errc {
  ring_mismatch,
  not_a_unit,
  invalid_element,
  unsupported_ring_tier,
  dimension_mismatch,
  not_a_group,
  not_associative,
  malformed_table,
  antipode_required,
  unit_required,
  not_an_integral,
  not_centralizing,
  not_a_subbialgebra,
  not_normal,
  induced_structure_ill_defined,
  not_an_endomorphism_action,
  not_cocommutative,
  hypothesis_unsatisfied,
  invalid_modulus,
  not_idempotent,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_a_unit: return "NotAUnit";
    case errc::invalid_element: return "InvalidElement";
    case errc::unsupported_ring_tier: return "UnsupportedRingTier";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_group: return "NotAGroup";
    case errc::not_associative: return "NotAssociative";
    case errc::malformed_table: return "MalformedTable";
    case errc::antipode_required: return "AntipodeRequired";
    case errc::unit_required: return "UnitRequired";
    case errc::not_an_integral: return "NotAnIntegral";
    case errc::not_centralizing: return "NotCentralizing";
    case errc::not_a_subbialgebra: return "NotASubbialgebra";
    case errc::not_normal: return "NotNormal";
    case errc::induced_structure_ill_defined: return "InducedStructureIllDefined";
    case errc::not_an_endomorphism_action: return "NotAnEndomorphismAction";
    case errc::not_cocommutative: return "NotCocommutative";
    case errc::hypothesis_unsatisfied: return "HypothesisUnsatisfied";
    case errc::invalid_modulus: return "InvalidModulus";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace hopfint

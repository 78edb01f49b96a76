#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

enum class errc {
  // input / validation
  degenerate_input,
  not_cube_free,
  unsupported_basis_case,
  bad_prime,
  not_coprime,
  not_full_rank,
  bad_witness,
  bad_config,
  // mathematical cross-check failures; these indicate a broken classifier
  // or a violated lemma-level invariant, never bad user input
  not_an_order,
  classification_gap,
  multiplicity_violation,
  inconsistency,
};

constexpr const char* errc_name(errc c) {
  switch (c) {
    case errc::degenerate_input: return "DegenerateInput";
    case errc::not_cube_free: return "NotCubeFree";
    case errc::unsupported_basis_case: return "UnsupportedBasisCase";
    case errc::bad_prime: return "BadPrime";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_full_rank: return "NotFullRank";
    case errc::bad_witness: return "BadWitness";
    case errc::bad_config: return "BadConfig";
    case errc::not_an_order: return "NotAnOrder";
    case errc::classification_gap: return "ClassificationGap";
    case errc::multiplicity_violation: return "MultiplicityViolation";
    case errc::inconsistency: return "Inconsistency";
  }
  return "Unknown";
}

// true for errors that mean "the math cross-checks failed", as opposed to
// invalid input; the CLI maps these to a distinct exit code
constexpr bool is_internal(errc c) {
  switch (c) {
    case errc::not_an_order:
    case errc::classification_gap:
    case errc::multiplicity_violation:
    case errc::inconsistency:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cubic

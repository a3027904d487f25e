#pragma once

#include <stdexcept>
#include <string>

namespace linent {

/// Machine-checkable reason attached to every linent::Error.
enum class errc {
  empty_alphabet,
  length_mismatch,
  negative_mass,
  mass_above_one,
  not_normalized,
  duplicate_label,
  negative_weight,
  all_zero_weights,
  all_zero_counts,
  empty_input,
  zero_size,
  singleton_alphabet,
  label_mismatch,
  absolute_continuity_violated,
  out_of_range,
  zero_probability,
  invalid_spec,
  parse_error,
  unknown_property,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace linent

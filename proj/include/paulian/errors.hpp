#ifndef PAULIAN_ERRORS_HPP
#define PAULIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paulian {

enum class Errc {
  invalid_input,
  dimension_mismatch,
  length_mismatch,
  parse_error,
  validation,
  io_error,
  not_an_involution,
  not_self_adjoint,
  not_isometry,
  not_unitary,
  not_normal,
  not_paulian,
  not_invariant,
  not_maximal_abelian,
  non_orthogonal_codewords,
  zero_projection,
  not_correctable,
  too_many_errors,
  capacity_exceeded,
  insufficient_space,
  insufficient_spares,
  not_divisible,
  table_invalid,
  state_outside_domain,
  uncorrectable_syndrome,
  invalid_channel,
  signature_collision,
  scalar_operator,
  cutoff_too_small,
  certification_failure,
};

const char *errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &msg) {
  throw Error(code, msg);
}

inline void require(bool ok, Errc code, const std::string &msg) {
  if (!ok)
    fail(code, msg);
}

} // namespace paulian

#endif

#ifndef CANTOR_ERRORS_HPP
#define CANTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cantor {

enum class errc {
  arity_too_small,
  family_constraint_violated,
  rank_non_positive,
  root_out_of_range,
  branch_out_of_range,
  leaf_not_in_basis,
  signature_mismatch,
  not_descendant,
  not_order_preserving,
  size_mismatch,
  not_a_bijection,
  not_invariant,
  not_finite_up_to_bound,
  not_centralizing,
  type_absent,
  not_in_t,
  unsupported_size,
  size_bound_too_small,
  join_diverged,
  parse_error,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace cantor

#endif

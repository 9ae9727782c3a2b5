#pragma once

#include <stdexcept>
#include <string>

namespace scg {

enum class Errc {
  not_a_partial_order,
  no_top_or_bottom,
  unknown_poset,
  unknown_atom,
  empty_option_set,
  poset_mismatch,
  not_an_option,
  simplification_diverged,
  no_duality_map,
  not_a_gift_horse,
  supremum_undefined,
  carrier_too_large,
  not_passable,
  verification_failed,
  too_large,
  syntax_error,
  fixture_parse_error,
  invalid_payoff,
  invalid_board,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace scg

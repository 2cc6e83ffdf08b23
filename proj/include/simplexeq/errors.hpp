#pragma once

#include <stdexcept>
#include <string>

namespace simplexeq {

enum class Errc {
  parse_error,
  entry_out_of_range,
  sigma_out_of_range,
  column_not_stochastic,
  zero_column,
  shape_mismatch,
  index_out_of_range,
  price_not_on_simplex,
  empty_matrix,
  generation_failed,
};

/// Domain error with a machine-readable code; the CLI maps codes to its
/// exit-code contract, everything else just reads the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace simplexeq

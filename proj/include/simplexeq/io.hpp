#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simplexeq/equilibrium.hpp"
#include "simplexeq/model.hpp"

namespace simplexeq {

/// An economy file, parsed but not yet validated. Two formats are
/// accepted (see docs/formats.md): the canonical JSON document with fields
/// n, m, W and sigma, and a CSV convenience form holding the rows of W
/// with sigma on the trailing line.
struct RawEconomy {
  std::vector<std::vector<Rational>> w_rows;
  std::vector<int> sigma_one_based;
};

/// Parses economy text, sniffing JSON vs CSV (a leading '{' selects
/// JSON). `source_name` is only used in error messages.
RawEconomy parse_economy(std::string_view text, const std::string& source_name = "<input>");

/// Canonical economy document: JSON with exact fraction strings. Output
/// is deterministic byte-for-byte for equal economies.
std::string economy_to_json(const SimplexEconomy& econ);

/// Machine-readable result report; all rationals appear as exact fraction
/// strings, decimal renderings are display-only annotations. Deterministic
/// byte-for-byte for equal inputs.
std::string report_to_json(const ValidatedEconomy& validated, const EquilibriumResult& result,
                           const VerificationReport* verification);

/// Human-readable rendering of the same report.
std::string report_to_table(const ValidatedEconomy& validated, const EquilibriumResult& result,
                            const VerificationReport* verification);

/// One-line summaries used by the validate subcommand.
std::string column_sums_line(const ValidationReport& report);
std::string adjustments_lines(const ValidationReport& report);

}  // namespace simplexeq

#include "simplexeq/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace simplexeq {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& source, const std::string& what) {
  throw Error(Errc::parse_error, source + ": " + what);
}

Rational entry_from_json(const ordered_json& v, const std::string& source, int i, int j) {
  const std::string where =
      "W entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) {
    parse_fail(source, where + " is a bare decimal; quote it (\"0.2\") so it parses exactly");
  }
  parse_fail(source, where + " must be a string or integer");
}

RawEconomy parse_economy_json(std::string_view text, const std::string& source) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(source, e.what());
  }
  if (!doc.is_object()) parse_fail(source, "top-level JSON value must be an object");
  for (const char* key : {"n", "m", "W", "sigma"}) {
    if (!doc.contains(key)) parse_fail(source, std::string("missing field '") + key + "'");
  }
  if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer()) {
    parse_fail(source, "'n' and 'm' must be integers");
  }
  const int n = doc["n"].get<int>();
  const int m = doc["m"].get<int>();
  if (n < 1 || m < 1) parse_fail(source, "'n' and 'm' must be at least 1");
  if (!doc["W"].is_array() || static_cast<int>(doc["W"].size()) != m) {
    parse_fail(source, "'W' must be an array of m = " + std::to_string(m) + " rows");
  }

  RawEconomy out;
  out.w_rows.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& row = doc["W"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      parse_fail(source, "W row " + std::to_string(i + 1) + " must hold n = " +
                             std::to_string(n) + " entries");
    }
    std::vector<Rational> parsed;
    parsed.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      parsed.push_back(entry_from_json(row[static_cast<std::size_t>(j)], source, i, j));
    }
    out.w_rows.push_back(std::move(parsed));
  }

  if (!doc["sigma"].is_array() || static_cast<int>(doc["sigma"].size()) != m) {
    parse_fail(source, "'sigma' must be an array of m = " + std::to_string(m) + " integers");
  }
  for (int i = 0; i < m; ++i) {
    const auto& v = doc["sigma"][static_cast<std::size_t>(i)];
    if (!v.is_number_integer()) {
      parse_fail(source, "sigma(" + std::to_string(i + 1) + ") must be an integer");
    }
    out.sigma_one_based.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

RawEconomy parse_economy_csv(std::string_view text, const std::string& source) {
  std::vector<std::string> lines;
  {
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.size() < 2) {
    parse_fail(source, "CSV form needs at least one W row followed by the sigma line");
  }

  RawEconomy out;
  for (std::size_t r = 0; r + 1 < lines.size(); ++r) {
    std::vector<Rational> row;
    for (const auto& field : split_fields(lines[r])) row.push_back(Rational::parse(field));
    if (!out.w_rows.empty() && row.size() != out.w_rows.front().size()) {
      parse_fail(source, "W row " + std::to_string(r + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(out.w_rows.front().size()));
    }
    out.w_rows.push_back(std::move(row));
  }
  for (const auto& field : split_fields(lines.back())) {
    Rational v = Rational::parse(field);
    if (v.den() != 1) parse_fail(source, "sigma entries must be integers, got " + v.str());
    out.sigma_one_based.push_back(static_cast<int>(v.num().convert_to<long long>()));
  }
  return out;
}

ordered_json matrix_json(const Allocation& a) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < a.consumers(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < a.commodities(); ++j) row.push_back(a.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json validation_json(const ValidationReport& report) {
  ordered_json v;
  v["policy"] = report.policy == StochasticPolicy::exact ? "exact" : "normalize";
  ordered_json sums = ordered_json::array();
  bool stochastic = true;
  for (const auto& s : report.column_sums) {
    sums.push_back(s.str());
    if (s != Rational(1)) stochastic = false;
  }
  v["column_sums"] = std::move(sums);
  v["stochastic_as_given"] = stochastic;
  ordered_json adjusted = ordered_json::array();
  for (const auto& adj : report.adjustments) {
    adjusted.push_back({{"column", adj.column + 1}, {"original_sum", adj.original_sum.str()}});
  }
  v["normalized_columns"] = std::move(adjusted);
  return v;
}

ordered_json solve_json(const SupportingPrice& price, const PreferenceGroups& groups) {
  ordered_json s;
  s["status"] = outcome_name(price.outcome);
  s["rows"] = price.system_rows;
  s["columns"] = price.system_cols;
  if (const auto* under = std::get_if<Underdetermined>(&price.outcome)) {
    s["rank"] = under->rank;
    ordered_json free_commodities = ordered_json::array();
    for (int c : under->free_columns) {
      free_commodities.push_back(groups.groups[static_cast<std::size_t>(c)].commodity + 1);
    }
    s["free_commodities"] = std::move(free_commodities);
  } else if (const auto* bad = std::get_if<Inconsistent>(&price.outcome)) {
    ordered_json combo = ordered_json::array();
    for (const auto& c : bad->row_combination) combo.push_back(c.str());
    s["witness_row_combination"] = std::move(combo);
  }
  if (price.negative_component.has_value()) {
    s["negative_component"] = *price.negative_component + 1;
  }
  return s;
}

ordered_json verification_json(const VerificationReport& v) {
  ordered_json out;
  out["trials_requested"] = v.trials_requested;
  out["samples_checked"] = v.samples_checked;
  out["trials_exhausted"] = v.trials_exhausted;
  out["saturated_commodity"] =
      v.saturated_commodity ? ordered_json(*v.saturated_commodity + 1) : ordered_json(nullptr);
  out["witness_row_vanishes"] =
      v.witness_row_vanishes ? ordered_json(*v.witness_row_vanishes) : ordered_json(nullptr);
  out["witness_value_single_term"] =
      v.witness_value_single_term ? ordered_json(*v.witness_value_single_term)
                                  : ordered_json(nullptr);
  out["counterexamples"] = ordered_json::array();
  for (const auto& cx : v.counterexamples) {
    out["counterexamples"].push_back(
        {{"trial", cx.trial}, {"allocation", matrix_json(cx.g)}});
  }
  return out;
}

void append_matrix(std::ostream& os, const Allocation& a, const char* indent) {
  std::vector<std::size_t> width(static_cast<std::size_t>(a.commodities()), 0);
  for (int j = 0; j < a.commodities(); ++j) {
    for (int i = 0; i < a.consumers(); ++i) {
      width[static_cast<std::size_t>(j)] =
          std::max(width[static_cast<std::size_t>(j)], a.at(i, j).str().size());
    }
  }
  for (int i = 0; i < a.consumers(); ++i) {
    os << indent << "[";
    for (int j = 0; j < a.commodities(); ++j) {
      std::string cell = a.at(i, j).str();
      os << " " << cell << std::string(width[static_cast<std::size_t>(j)] - cell.size(), ' ');
    }
    os << " ]\n";
  }
}

}  // namespace

RawEconomy parse_economy(std::string_view text, const std::string& source_name) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) parse_fail(source_name, "empty input");
  if (text[first] == '{') return parse_economy_json(text, source_name);
  return parse_economy_csv(text, source_name);
}

std::string economy_to_json(const SimplexEconomy& econ) {
  ordered_json doc;
  doc["n"] = econ.commodities();
  doc["m"] = econ.consumers();
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < econ.consumers(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < econ.commodities(); ++j) {
      row.push_back(econ.endowments().at(i, j).str());
    }
    rows.push_back(std::move(row));
  }
  doc["W"] = std::move(rows);
  doc["sigma"] = econ.preferences().one_based();
  return doc.dump(2) + "\n";
}

std::string report_to_json(const ValidatedEconomy& validated, const EquilibriumResult& result,
                           const VerificationReport* verification) {
  const SimplexEconomy& econ = validated.economy;
  ordered_json doc;
  doc["consumers"] = econ.consumers();
  doc["commodities"] = econ.commodities();
  doc["validation"] = validation_json(validated.report);

  ordered_json groups = ordered_json::array();
  for (const auto& g : result.groups.groups) {
    ordered_json consumers = ordered_json::array();
    for (int i : g.members) consumers.push_back(i + 1);
    groups.push_back({{"commodity", g.commodity + 1}, {"consumers", std::move(consumers)}});
  }
  doc["groups"] = std::move(groups);

  ordered_json mins = ordered_json::array();
  for (int s = 0; s < result.groups.count(); ++s) {
    mins.push_back({{"commodity", result.groups.groups[static_cast<std::size_t>(s)].commodity + 1},
                    {"value", result.mins.value[static_cast<std::size_t>(s)].str()},
                    {"used", static_cast<bool>(result.mins.used[static_cast<std::size_t>(s)])}});
  }
  doc["min_terms"] = std::move(mins);

  doc["minimal"] = result.minimality.minimal;
  doc["witness"] = result.minimality.witness ? ordered_json(*result.minimality.witness + 1)
                                             : ordered_json(nullptr);
  doc["f_star"] = matrix_json(result.f_star);

  if (result.price.price.has_value()) {
    const PriceSystem& p = *result.price.price;
    ordered_json fr = ordered_json::array();
    ordered_json dec = ordered_json::array();
    for (int j = 0; j < p.commodities(); ++j) {
      fr.push_back(p[j].str());
      dec.push_back(p[j].decimal());
    }
    doc["p_star"] = {{"fractions", std::move(fr)}, {"decimals", std::move(dec)}};
  } else {
    doc["p_star"] = nullptr;
  }

  doc["solve"] = solve_json(result.price, result.groups);

  ordered_json budgets = ordered_json::array();
  for (std::size_t i = 0; i < result.budgets.size(); ++i) {
    budgets.push_back({{"consumer", static_cast<int>(i) + 1},
                       {"endowment_value", result.budgets[i].endowment_value.str()},
                       {"allocation_value", result.budgets[i].allocation_value.str()}});
  }
  doc["budgets"] = std::move(budgets);
  doc["value_exceeds_components"] =
      result.value_exceeds_components ? ordered_json(*result.value_exceeds_components)
                                      : ordered_json(nullptr);
  doc["verification"] = verification ? verification_json(*verification) : ordered_json(nullptr);
  doc["caveats"] = result.caveats;
  return doc.dump(2) + "\n";
}

std::string report_to_table(const ValidatedEconomy& validated, const EquilibriumResult& result,
                            const VerificationReport* verification) {
  const SimplexEconomy& econ = validated.economy;
  std::ostringstream os;
  os << "economy: " << econ.consumers() << " consumers, " << econ.commodities()
     << " commodities\n";
  os << column_sums_line(validated.report) << "\n";
  os << adjustments_lines(validated.report);

  os << "groups (commodity <- consumers):\n";
  for (const auto& g : result.groups.groups) {
    os << "  " << g.commodity + 1 << " <-";
    for (int i : g.members) os << " " << i + 1;
    os << "\n";
  }
  os << "min terms:";
  for (int s = 0; s < result.groups.count(); ++s) {
    os << " Min[" << result.groups.groups[static_cast<std::size_t>(s)].commodity + 1
       << "] = " << result.mins.value[static_cast<std::size_t>(s)].str();
    if (!result.mins.used[static_cast<std::size_t>(s)]) os << " (unused)";
  }
  os << "\n";
  if (result.minimality.minimal) {
    os << "minimal: yes (witness: consumer " << *result.minimality.witness + 1 << ")\n";
  } else {
    os << "minimal: no\n";
  }
  os << "F*:\n";
  append_matrix(os, result.f_star, "  ");

  if (result.price.price.has_value()) {
    const PriceSystem& p = *result.price.price;
    os << "p*: (";
    for (int j = 0; j < p.commodities(); ++j) os << (j ? ", " : "") << p[j].str();
    os << ")  ~ (";
    for (int j = 0; j < p.commodities(); ++j) os << (j ? ", " : "") << p[j].decimal();
    os << ")\n";
    os << "budgets (consumer: endowment value -> allocation value):\n";
    for (std::size_t i = 0; i < result.budgets.size(); ++i) {
      os << "  " << i + 1 << ": " << result.budgets[i].endowment_value.str() << " -> "
         << result.budgets[i].allocation_value.str() << "\n";
    }
  } else {
    os << "p*: not available (" << outcome_name(result.price.outcome);
    if (result.price.negative_component) {
      os << "; negative component at commodity " << *result.price.negative_component + 1;
    }
    os << ")\n";
  }

  if (verification != nullptr) {
    os << "verification: " << verification->samples_checked << " dominating allocations checked, "
       << verification->counterexamples.size() << " within budget";
    if (verification->saturated_commodity) {
      os << " (column " << *verification->saturated_commodity + 1
         << " leaves no mass to move; nothing to sample)";
    }
    os << "\n";
    if (verification->witness_row_vanishes) {
      os << "witness row vanishes off its own commodity: "
         << (*verification->witness_row_vanishes ? "yes" : "no") << "\n";
    }
    for (const auto& cx : verification->counterexamples) {
      os << "counterexample (trial " << cx.trial << "):\n";
      append_matrix(os, cx.g, "  ");
    }
  }
  for (const auto& caveat : result.caveats) os << "note: " << caveat << "\n";
  return os.str();
}

std::string column_sums_line(const ValidationReport& report) {
  std::string line = "column sums:";
  for (const auto& s : report.column_sums) line += " " + s.str();
  return line;
}

std::string adjustments_lines(const ValidationReport& report) {
  std::string out;
  for (const auto& adj : report.adjustments) {
    out += "normalized column " + std::to_string(adj.column + 1) + " (original sum " +
           adj.original_sum.str() + ")\n";
  }
  return out;
}

}  // namespace simplexeq

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simplexeq/equilibrium.hpp"
#include "simplexeq/gen.hpp"
#include "simplexeq/io.hpp"
#include "simplexeq/model.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Rational <-> fractions.Fraction. Ints, Fractions and strings (fraction
// or decimal literals) convert exactly; floats are rejected so inexact
// values never sneak into the math paths.
template <>
struct type_caster<simplexeq::Rational> {
 public:
  PYBIND11_TYPE_CASTER(simplexeq::Rational, const_name("Fraction"));

  bool load(handle src, bool) {
    if (isinstance<float_>(src)) return false;
    try {
      if (isinstance<int_>(src) || isinstance<str>(src)) {
        value = simplexeq::Rational::parse(str(src).cast<std::string>());
        return true;
      }
      if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
        simplexeq::BigInt num{str(src.attr("numerator")).cast<std::string>()};
        simplexeq::BigInt den{str(src.attr("denominator")).cast<std::string>()};
        value = simplexeq::Rational(std::move(num), std::move(den));
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const simplexeq::Rational& r, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(r.str()).release();
  }
};

}  // namespace pybind11::detail

namespace {

using Rows = std::vector<std::vector<simplexeq::Rational>>;

Rows allocation_rows(const simplexeq::Allocation& a) {
  Rows rows;
  rows.reserve(static_cast<std::size_t>(a.consumers()));
  for (int i = 0; i < a.consumers(); ++i) {
    auto r = a.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

simplexeq::StochasticPolicy policy_from(const std::string& name) {
  if (name == "exact") return simplexeq::StochasticPolicy::exact;
  if (name == "normalize") return simplexeq::StochasticPolicy::normalize;
  throw py::value_error("policy must be 'exact' or 'normalize'");
}

struct PyEconomy {
  simplexeq::ValidatedEconomy validated;
};

struct PyResult {
  simplexeq::ValidatedEconomy validated;
  simplexeq::EquilibriumResult result;
  std::optional<simplexeq::VerificationReport> verification;
};

PyEconomy make_economy(const Rows& w, const std::vector<int>& sigma, const std::string& policy) {
  return PyEconomy{simplexeq::validate_economy(w, sigma, policy_from(policy))};
}

PyResult solve_economy(const PyEconomy& econ, int verify_trials, std::uint64_t seed) {
  PyResult out{econ.validated, simplexeq::solve_equilibrium(econ.validated.economy), std::nullopt};
  if (verify_trials > 0) {
    out.verification = simplexeq::verify_equilibrium_sampled(out.result, econ.validated.economy,
                                                             verify_trials, seed);
  }
  return out;
}

py::object verification_dict(const PyResult& r) {
  if (!r.verification) return py::none();
  const auto& v = *r.verification;
  py::dict d;
  d["trials_requested"] = v.trials_requested;
  d["samples_checked"] = v.samples_checked;
  d["trials_exhausted"] = v.trials_exhausted;
  d["saturated_commodity"] =
      v.saturated_commodity ? py::cast(*v.saturated_commodity + 1) : py::none();
  d["witness_row_vanishes"] =
      v.witness_row_vanishes ? py::cast(*v.witness_row_vanishes) : py::none();
  d["witness_value_single_term"] =
      v.witness_value_single_term ? py::cast(*v.witness_value_single_term) : py::none();
  py::list counterexamples;
  for (const auto& cx : v.counterexamples) {
    py::dict entry;
    entry["trial"] = cx.trial;
    entry["allocation"] = allocation_rows(cx.g);
    counterexamples.append(std::move(entry));
  }
  d["counterexamples"] = std::move(counterexamples);
  return d;
}

}  // namespace

PYBIND11_MODULE(_simplexeq, m) {
  m.doc() = "Exact competitive-equilibrium solver for simplex exchange economies";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const simplexeq::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyEconomy>(m, "Economy")
      .def(py::init(&make_economy), py::arg("w"), py::arg("sigma"), py::arg("policy") = "exact",
           "Validate endowments W (rows of Fractions, exact strings or ints) and\n"
           "1-based preferences sigma into an economy.")
      .def_property_readonly(
          "m", [](const PyEconomy& e) { return e.validated.economy.consumers(); })
      .def_property_readonly(
          "n", [](const PyEconomy& e) { return e.validated.economy.commodities(); })
      .def_property_readonly(
          "w",
          [](const PyEconomy& e) {
            return allocation_rows(e.validated.economy.endowments().allocation());
          })
      .def_property_readonly(
          "sigma",
          [](const PyEconomy& e) { return e.validated.economy.preferences().one_based(); })
      .def_property_readonly(
          "column_sums", [](const PyEconomy& e) { return e.validated.report.column_sums; })
      .def("to_json",
           [](const PyEconomy& e) { return simplexeq::economy_to_json(e.validated.economy); })
      .def("__repr__", [](const PyEconomy& e) {
        return "<Economy m=" + std::to_string(e.validated.economy.consumers()) +
               " n=" + std::to_string(e.validated.economy.commodities()) + ">";
      });

  py::class_<PyResult>(m, "Result")
      .def_property_readonly("minimal",
                             [](const PyResult& r) { return r.result.minimality.minimal; })
      .def_property_readonly("witness",
                             [](const PyResult& r) -> py::object {
                               if (!r.result.minimality.witness) return py::none();
                               return py::cast(*r.result.minimality.witness + 1);
                             })
      .def_property_readonly("f_star",
                             [](const PyResult& r) { return allocation_rows(r.result.f_star); })
      .def_property_readonly("p_star",
                             [](const PyResult& r) -> py::object {
                               if (!r.result.price.price) return py::none();
                               const auto& p = *r.result.price.price;
                               std::vector<simplexeq::Rational> coords(p.coords().begin(),
                                                                       p.coords().end());
                               return py::cast(coords);
                             })
      .def_property_readonly(
          "budgets",
          [](const PyResult& r) {
            std::vector<std::pair<simplexeq::Rational, simplexeq::Rational>> out;
            for (const auto& b : r.result.budgets) {
              out.emplace_back(b.endowment_value, b.allocation_value);
            }
            return out;
          })
      .def_property_readonly(
          "groups",
          [](const PyResult& r) {
            std::vector<std::pair<int, std::vector<int>>> out;
            for (const auto& g : r.result.groups.groups) {
              std::vector<int> members;
              for (int i : g.members) members.push_back(i + 1);
              out.emplace_back(g.commodity + 1, std::move(members));
            }
            return out;
          })
      .def_property_readonly(
          "min_terms",
          [](const PyResult& r) {
            std::vector<std::pair<int, simplexeq::Rational>> out;
            for (int s = 0; s < r.result.groups.count(); ++s) {
              out.emplace_back(r.result.groups.groups[static_cast<std::size_t>(s)].commodity + 1,
                               r.result.mins.value[static_cast<std::size_t>(s)]);
            }
            return out;
          })
      .def_property_readonly(
          "solve_status",
          [](const PyResult& r) { return simplexeq::outcome_name(r.result.price.outcome); })
      .def_property_readonly("caveats", [](const PyResult& r) { return r.result.caveats; })
      .def_property_readonly("verification", &verification_dict)
      .def("report_json",
           [](const PyResult& r) {
             return simplexeq::report_to_json(r.validated, r.result,
                                              r.verification ? &*r.verification : nullptr);
           })
      .def("__repr__", [](const PyResult& r) {
        return std::string("<Result minimal=") + (r.result.minimality.minimal ? "True" : "False") +
               " status=" + simplexeq::outcome_name(r.result.price.outcome) + ">";
      });

  m.def("solve", &solve_economy, py::arg("economy"), py::arg("verify_trials") = 0,
        py::arg("seed") = 0,
        "Run the full pipeline: grouping, minimality, F*, supporting price,\n"
        "budgets, and optionally the sampled budget defense.");

  m.def(
      "generate",
      [](int m_, int n_, std::uint64_t seed, unsigned denominator_bound, bool minimal) {
        simplexeq::GenSpec spec;
        spec.consumers = m_;
        spec.commodities = n_;
        spec.seed = seed;
        spec.denominator_bound = denominator_bound;
        spec.force_minimal = minimal;
        simplexeq::SimplexEconomy econ = simplexeq::generate_economy(spec);
        Rows rows = allocation_rows(econ.endowments().allocation());
        return make_economy(rows, econ.preferences().one_based(), "exact");
      },
      py::arg("m"), py::arg("n"), py::arg("seed") = 0, py::arg("denominator_bound") = 10,
      py::arg("minimal") = false, "Deterministically generate a valid economy.");

  m.def(
      "from_text",
      [](const std::string& text) {
        simplexeq::RawEconomy raw = simplexeq::parse_economy(text);
        return PyEconomy{simplexeq::validate_economy(raw.w_rows, raw.sigma_one_based)};
      },
      py::arg("text"), "Parse and validate an economy document (JSON or CSV form).");

  m.def(
      "value",
      [](const std::vector<simplexeq::Rational>& bundle,
         const std::vector<simplexeq::Rational>& price) {
        return simplexeq::value(bundle, simplexeq::PriceSystem(price));
      },
      py::arg("bundle"), py::arg("price"),
      "Exact value of a bundle under a price system on the simplex.");

  m.def(
      "is_feasible",
      [](const Rows& rows) { return simplexeq::is_feasible(simplexeq::Allocation(rows)); },
      py::arg("rows"), "Whether every column sums exactly to 1.");

  m.def(
      "strictly_prefers",
      [](const Rows& f, const Rows& g, const std::vector<int>& sigma) {
        simplexeq::Allocation fa{f};
        simplexeq::Allocation ga{g};
        simplexeq::PreferenceVector prefs{sigma, fa.commodities()};
        return simplexeq::strictly_prefers(fa, ga, prefs);
      },
      py::arg("f"), py::arg("g"), py::arg("sigma"),
      "Whether every consumer's preferred coordinate strictly increases from f to g.");
}

#include "evidence/commands.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <ostream>

#include <fmt/format.h>

#include "evidence/combination.hpp"
#include "evidence/model_document.hpp"

namespace evidence {

namespace {

// Generated sweep values are snapped to this grid so that 0.1 * 3 prints as 0.3.
constexpr double kSweepSnap = 1e12;

double parse_number(std::string_view text, const std::string& where) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ValidationError(where + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

void require_unit(double x, const std::string& where) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(where + " must lie in [0, 1], got " + fmt::format("{}", x));
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<double> parse_axis_values(std::string_view text, const std::string& where) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const double v = parse_number(parts[0], where);
    require_unit(v, where);
    return {v};
  }
  if (parts.size() != 3) throw ValidationError(where + ": expected value or start:stop:step");
  const double start = parse_number(parts[0], where + " start");
  const double stop = parse_number(parts[1], where + " stop");
  const double step = parse_number(parts[2], where + " step");
  require_unit(start, where + " start");
  require_unit(stop, where + " stop");
  if (!(step > 0.0)) throw ValidationError(where + ": step must be positive");

  std::vector<double> values;
  const double slack = 1e-9 * step;
  for (std::size_t i = 0;; ++i) {
    double v = start + static_cast<double>(i) * step;
    if (v > stop + slack) break;
    v = std::round(v * kSweepSnap) / kSweepSnap;
    values.push_back(std::min(v, 1.0));
  }
  return values;
}

std::string format_value(double x) { return fmt::format("{}", x + 0.0); }

Subset proposition_from(const Frame& target, const std::vector<std::string>& labels) {
  try {
    return target.subset(labels);
  } catch (const UnknownLabelError& e) {
    throw ValidationError("proposition names unknown label '" + e.label() + "'");
  }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const TotalConflictError& e) {
    err << "error: total conflict: " << e.what() << '\n';
    return kExitTotalConflict;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  }
}

void warn_if_combining(const ModelDocument& doc, std::ostream& err) {
  if (doc.sources.size() < 2) return;
  std::string names;
  for (const auto& source : doc.sources) {
    if (!names.empty()) names += ", ";
    names += source.name;
  }
  err << "warning: combining " << doc.sources.size() << " sources (" << names
      << ") by Dempster's rule; the model file asserts they are independent\n";
}

}  // namespace

std::string format_degree(double x) { return fmt::format("{:.4f}", x + 0.0); }

std::vector<SweepAxis> parse_sweep(std::string_view spec) {
  std::vector<SweepAxis> axes;
  for (auto item : split(spec, ',')) {
    const auto eq = item.find('=');
    if (eq != 1 || std::string_view("rpq").find(item[0]) == std::string_view::npos) {
      throw ValidationError("sweep item '" + std::string(item) +
                            "' must look like r=..., p=... or q=...");
    }
    const char variable = item[0];
    for (const auto& axis : axes) {
      if (axis.variable == variable) {
        throw ValidationError(std::string("sweep repeats variable '") + variable + "'");
      }
    }
    axes.push_back({variable, parse_axis_values(item.substr(2), std::string("sweep ") + variable)});
  }
  return axes;
}

std::vector<ReliabilityScenario> build_grid(const BayesFlags& flags) {
  std::vector<double> r_values, p_values, q_values;
  auto fixed = [](const std::optional<double>& v, const char* name) {
    std::vector<double> out;
    if (v) {
      require_unit(*v, std::string("--") + name);
      out.push_back(*v);
    }
    return out;
  };
  r_values = fixed(flags.r, "r");
  p_values = fixed(flags.p, "p");
  q_values = fixed(flags.q, "q");

  if (flags.sweep) {
    for (auto& axis : parse_sweep(*flags.sweep)) {
      auto& target = axis.variable == 'r' ? r_values : axis.variable == 'p' ? p_values : q_values;
      if (!target.empty()) {
        throw ValidationError(std::string("'") + axis.variable +
                              "' is given both as a flag and in the sweep");
      }
      if (axis.values.empty()) return {};
      target = std::move(axis.values);
    }
  }
  if (r_values.empty()) r_values.push_back(0.8);
  if (p_values.empty()) throw ValidationError("missing --p (or a p= sweep axis)");
  if (q_values.empty()) throw ValidationError("missing --q (or a q= sweep axis)");

  std::vector<ReliabilityScenario> grid;
  grid.reserve(r_values.size() * p_values.size() * q_values.size());
  for (double r : r_values) {
    for (double p : p_values) {
      for (double q : q_values) grid.push_back({r, p, q});
    }
  }
  return grid;
}

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load_model_file(options.model);
    std::optional<Subset> proposition;
    if (!options.proposition.empty()) proposition = proposition_from(doc.target, options.proposition);
    warn_if_combining(doc, err);

    const auto result = evaluate(doc.combined_model());
    std::string report = "conflict " + format_degree(result.conflict) + "\n";
    for (std::size_t i = 0; i < doc.target.size(); ++i) {
      const auto single = doc.target.singleton(i);
      report += fmt::format("{} Bel={} Pl={}\n", doc.target.label(i),
                            format_degree(belief(result.mass, single)),
                            format_degree(plausibility(result.mass, single)));
    }
    if (proposition) {
      report += fmt::format("{} Bel={} Pl={}\n", proposition->to_string(),
                            format_degree(belief(result.mass, *proposition)),
                            format_degree(plausibility(result.mass, *proposition)));
    }
    out << report;
    return static_cast<int>(kExitOk);
  });
}

int cmd_bayes(const BayesFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto grid = build_grid(flags);
    if (!flags.sweep) {
      out << format_degree(reliability_posterior(grid.front())) << '\n';
      return static_cast<int>(kExitOk);
    }
    std::string csv = "r,p,q,posterior\n";
    for (const auto& s : grid) {
      std::string posterior;
      try {
        posterior = format_degree(reliability_posterior(s));
      } catch (const InconsistentScenarioError&) {
        posterior = "undefined";
      }
      csv += fmt::format("{},{},{},{}\n", format_value(s.reliability), format_value(s.prior),
                         format_value(s.careless_accuracy), posterior);
    }
    out << csv;
    return static_cast<int>(kExitOk);
  });
}

int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load_model_file(options.model);
    if (options.proposition.empty()) throw ValidationError("compare needs --prop");
    const auto proposition = proposition_from(doc.target, options.proposition);
    const auto grid = build_grid(options.flags);
    warn_if_combining(doc, err);

    std::string csv = "r,p,q,bayes,bel,pl\n";
    for (const auto& row : compare_designs(grid, doc.combined_model(), proposition)) {
      csv += fmt::format("{},{},{},{},{},{}\n", format_value(row.scenario.reliability),
                         format_value(row.scenario.prior),
                         format_value(row.scenario.careless_accuracy),
                         row.bayes ? format_degree(*row.bayes) : std::string("undefined"),
                         format_degree(row.bel), format_degree(row.pl));
    }
    out << csv;
    return static_cast<int>(kExitOk);
  });
}

}  // namespace evidence

#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "confspace/configuration.hpp"
#include "confspace/equipartition.hpp"
#include "confspace/json_io.hpp"
#include "confspace/obstruction.hpp"
#include "confspace/svg.hpp"

namespace confspace::cli {

namespace {

// Writes through a sibling temporary so a failed run never leaves a
// truncated file behind.
void write_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + tmp + " for writing");
    file << contents;
    if (!file) throw std::runtime_error("write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

void emit(const CommandConfig& config, std::ostream& out, const std::string& contents) {
  if (config.output_path.empty())
    out << contents;
  else
    write_file(config.output_path, contents);
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const CommandConfig& config, std::istream& in) {
  if (config.input_path.empty()) return read_all(in);
  std::ifstream file(config.input_path, std::ios::binary);
  if (!file) throw MalformedInput("cannot read " + config.input_path);
  return read_all(file);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ")";
}

// quoted, with embedded quotes doubled
std::string csv_field(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string poset_csv(const FacePoset& poset) {
  std::string out = "index,label,dim\n";
  for (std::size_t i = 0; i < poset.size(); ++i)
    out += std::to_string(i) + "," + csv_field(format_label(poset.element(i))) + "," + std::to_string(poset.dim(i)) + "\n";
  return out;
}

}  // namespace

std::uint64_t budget_from_environment() {
  if (const char* env = std::getenv("CONFSPACE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed CONFSPACE_BUDGET=" << env << "\n";
    }
  }
  return kDefaultBudget;
}

int run_complex(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  if (config.d < 1 || config.n < 2) {
    err << "complex needs d >= 1 and n >= 2\n";
    return kBadInput;
  }
  std::optional<FacePoset> poset;
  try {
    poset = enumerate_cells(config.d, config.n, config.kind, config.budget);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBadInput;
  }

  const auto f = f_vector(*poset);
  const std::uint64_t nfact = factorial(config.n);
  bool ok = true;
  out << "kind " << to_string(config.kind) << " d " << config.d << " n " << config.n << "\n";
  out << "elements " << poset->size() << "\n";
  out << "f " << join(f) << "\n";

  if (config.kind == ComplexKind::complement) {
    const int top = top_dimension(config.d, config.n);
    std::uint64_t expected_total = nfact;
    for (int k = 1; k < config.n; ++k) expected_total *= config.d;
    const bool vertices = f.front() == nfact;
    const bool facets = f.back() == nfact && static_cast<int>(f.size()) == top + 1;
    const bool ridges = top == 0 || f[top - 1] == static_cast<std::uint64_t>(config.n - 1) * nfact;
    const bool total = poset->size() == expected_total;
    out << "chi " << euler_characteristic(*poset) << "\n";
    out << "check f_0 = n! " << (vertices ? "pass" : "FAIL") << "\n";
    out << "check f_M = n! " << (facets ? "pass" : "FAIL") << "\n";
    out << "check f_{M-1} = (n-1) n! " << (ridges ? "pass" : "FAIL") << "\n";
    out << "check sum f = n! d^(n-1) " << (total ? "pass" : "FAIL") << "\n";
    ok = vertices && facets && ridges && total;
  } else {
    // the origin is the only 0-dimensional stratum; chambers are the n! top strata
    const bool origin = f.front() == 1;
    const bool chambers = f.back() == nfact;
    out << "check single origin stratum " << (origin ? "pass" : "FAIL") << "\n";
    out << "check n! open strata " << (chambers ? "pass" : "FAIL") << "\n";
    ok = origin && chambers;
  }
  out << (ok ? "checks pass" : "checks FAILED") << "\n";

  if (!config.output_path.empty()) {
    const std::string body = config.format == "csv" ? poset_csv(*poset) : poset_to_json(*poset).dump() + "\n";
    write_file(config.output_path, body);
  }
  return ok ? kOk : kFailure;
}

int run_obstruction(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  if (config.d < 2 || config.n < 2) {
    err << "obstruction needs d >= 2 and n >= 2\n";
    return kBadInput;
  }
  const ObstructionReport report = obstruction_report(config.d, config.n);

  bool verified = true;
  if (config.verify) {
    std::optional<FacePoset> poset;
    try {
      poset = enumerate_cells(config.d, config.n, ComplexKind::complement, config.budget);
    } catch (const BudgetExceeded& e) {
      err << "budget exceeded: " << e.what() << "\n";
      return kBadInput;
    }
    const auto row = binomial_row(static_cast<unsigned>(config.n));
    std::vector<std::uint64_t> expected;
    for (int j = 1; j < config.n; ++j) expected.push_back(row[j].get_ui());
    const int top = top_dimension(config.d, config.n);
    std::size_t facets = 0;
    std::size_t incidence_ok = 0;
    for (std::size_t i = 0; i < poset->size(); ++i) {
      if (poset->dim(i) != top) continue;
      ++facets;
      if (facet_incidence_vector(poset->element(i), *poset) == expected) ++incidence_ok;
    }
    err << "incidence " << join(expected) << " on " << incidence_ok << "/" << facets << " facets\n";
    verified = incidence_ok == facets;
    if (report.witness) {
      const auto values = verify_coboundary_on_complex(config.d, config.n, *report.witness, config.budget);
      const auto ones = std::count_if(values.begin(), values.end(), [](const BigInt& v) { return v == 1; });
      err << "coboundary of witness equals 1 on " << ones << "/" << values.size() << " facets\n";
      verified = verified && ones == static_cast<long>(values.size());
    }
  }

  std::string body;
  if (config.format == "csv") {
    const Json j = report_to_json(report);
    body = "field,value\n";
    for (const auto& [key, value] : j.items()) body += key + "," + csv_field(value.dump()) + "\n";
  } else {
    body = report_to_json(report).dump() + "\n";
  }
  emit(config, out, body);
  if (!verified) {
    err << "verification failed\n";
    return kFailure;
  }
  return kOk;
}

int run_equipart(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  EquipartRequest request;
  try {
    request = parse_equipart_request(Json::parse(read_input(config, in)));
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kBadInput;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kBadInput;
  }
  if (config.tol) request.tol = *config.tol;
  if (config.seed) request.seed = *config.seed;
  if (!(request.tol > 0.0)) {
    err << "tol must be positive\n";
    return kBadInput;
  }

  EquipartOutcome outcome;
  try {
    if (request.mode == EquipartMode::weights) {
      try {
        auto solved = solve_equal_measure_weights(request.polygon, *request.sites, request.tol);
        outcome.diagram = std::move(solved.diagram);
        outcome.iterations = solved.iterations;
        outcome.converged = true;
      } catch (const ConvergenceError& e) {
        err << "weights did not converge: " << e.what() << "\n";
        const Eigen::VectorXd w = e.last_weights().size() == request.sites->cols()
                                      ? e.last_weights()
                                      : interior_start_weights(request.polygon, *request.sites);
        outcome.diagram = power_diagram(request.polygon, *request.sites, w);
        outcome.converged = false;
      }
      outcome.spread = outcome.diagram.all_cells_nonempty() ? perimeter_spread(outcome.diagram) : 0.0;
    } else {
      auto result = equalize_perimeters(request.polygon, request.n, request.tol, request.seed);
      outcome.diagram = std::move(result.diagram);
      outcome.spread = result.spread;
      outcome.iterations = result.iterations;
      outcome.converged = result.converged;
    }
  } catch (const ConvergenceError& e) {
    err << "equipart failed: " << e.what() << "\n";
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "malformed input: " << e.what() << "\n";
    return kBadInput;
  }

  emit(config, out, outcome_to_json(outcome).dump() + "\n");
  if (!config.svg_path.empty()) write_file(config.svg_path, to_svg(outcome.diagram));
  if (!outcome.converged) {
    err << "not converged within tol " << request.tol << "\n";
    return kFailure;
  }
  return kOk;
}

int run_label(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  ConfigurationXd points;
  try {
    Json input = Json::parse(read_input(config, in));
    points = configuration_from_json(input.is_object() ? input.at("points") : input);
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kBadInput;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kBadInput;
  }

  const CellLabel label = fox_neuwirth_label(points);
  if (config.format == "json") {
    Json j;
    j["label"] = format_label(label);
    if (label.d() == 2 && label.is_complement() && label.n() <= 9) j["bar"] = format_bar_label(label);
    j["sigma"] = label.sigma();
    j["seps"] = label.seps();
    j["stratum_dim"] = stratum_dimension(label);
    j["in_configuration_space"] = label.is_complement();
    emit(config, out, j.dump() + "\n");
  } else {
    emit(config, out, format_label(label) + "\n");
  }
  return kOk;
}

int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configuration-space cell complexes, equivariant obstructions and convex equipartitions"};
  app.require_subcommand(1);

  CommandConfig config;
  config.budget = budget_from_environment();
  std::string kind = "complement";
  double tol = 0.0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", config.output_path, "Output file (default: stdout)");
    sub->add_option("--budget", config.budget, "Maximum number of enumerated labels (env CONFSPACE_BUDGET)");
  };

  auto* complex = app.add_subcommand("complex", "Enumerate the cell complex and check its counts");
  complex->add_option("--d", config.d, "Ambient dimension")->check(CLI::Range(1, 64));
  complex->add_option("--n", config.n, "Number of points")->check(CLI::Range(2, 64));
  complex->add_option("--kind", kind, "complement or stratification")
      ->check(CLI::IsMember({"complement", "stratification"}));
  add_common(complex);

  auto* obstruction = app.add_subcommand("obstruction", "Primary equivariant obstruction report");
  obstruction->add_option("--d", config.d, "Ambient dimension")->check(CLI::Range(2, 64));
  obstruction->add_option("--n", config.n, "Number of points")->check(CLI::Range(2, 1 << 20));
  obstruction->add_flag("--verify", config.verify, "Check incidences and the witness on the enumerated complex");
  add_common(obstruction);

  auto* equipart = app.add_subcommand("equipart", "Equal-area power diagrams and perimeter equalization");
  auto* tol_opt = equipart->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  auto* seed_opt = equipart->add_option("--seed", seed, "Random seed");
  equipart->add_option("--input", config.input_path, "Request JSON (default: stdin)");
  equipart->add_option("--svg", config.svg_path, "Also write an SVG drawing");
  equipart->add_option("--d", config.d, "Ambient dimension (only 2 is supported)")->check(CLI::Range(2, 2));
  add_common(equipart);

  auto* label = app.add_subcommand("label", "Stratification label of a point configuration");
  label->add_option("--input", config.input_path, "Points JSON (default: stdin)");
  add_common(label);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  config.kind = parse_kind(kind);
  if (tol_opt->count() > 0) config.tol = tol;
  if (seed_opt->count() > 0) config.seed = seed;

  try {
    if (complex->parsed()) return run_complex(config, out, err);
    if (obstruction->parsed()) return run_obstruction(config, out, err);
    if (equipart->parsed()) return run_equipart(config, in, out, err);
    return run_label(config, in, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace confspace::cli

#ifndef CONFSPACE_TOOLS_COMMANDS_HPP
#define CONFSPACE_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "confspace/cell_label.hpp"
#include "confspace/face_poset.hpp"

namespace confspace::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int { kOk = 0, kFailure = 1, kBadInput = 2 };

struct CommandConfig {
  int d = 2;
  int n = 3;
  ComplexKind kind = ComplexKind::complement;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool verify = false;
  std::string format;  // empty: the subcommand's default
  std::string svg_path;
  std::uint64_t budget = kDefaultBudget;
  std::string input_path;
  std::string output_path;
};

/// Budget from CONFSPACE_BUDGET, or the default.
std::uint64_t budget_from_environment();

int run_complex(const CommandConfig& config, std::ostream& out, std::ostream& err);
int run_obstruction(const CommandConfig& config, std::ostream& out, std::ostream& err);
/// Reads the request from `in` when no input path is set.
int run_equipart(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int run_label(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Used by main().
int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace confspace::cli

#endif  // CONFSPACE_TOOLS_COMMANDS_HPP

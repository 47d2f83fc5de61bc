// hpdtool: command-line front-end for the hpd library.
//
// Exit codes: 0 ok, 1 a mathematical check failed, 2 invalid input,
// 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "hpd/errors.hpp"

#ifndef HPD_VERSION
#define HPD_VERSION "unknown"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

void flatten(const nlohmann::json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out += prefix + "," + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branching-Toeplitz kernels, HPD sequences and Hankel inequalities", "hpdtool"};
  app.set_version_flag("--version", HPD_VERSION);
  app.require_subcommand(1);

  hpdtool::Globals globals;
  std::size_t grid = 0;
  double tol = 0.0;
  std::string format = "json";
  auto* grid_opt = app.add_option("--grid", grid, "Quadrature / evaluation grid size")->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance override")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", globals.seed, "Master RNG seed");
  auto* threads_opt = app.add_option("--threads", globals.threads, "Worker threads (0 = all); env HPD_THREADS");
  app.add_option("--out", globals.out, "Write output to this file instead of stdout");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  hpdtool::Outcome outcome;
  // Globals are read by the subcommand callbacks, which run after all options are parsed.
  app.parse_complete_callback([&] {
    if (grid_opt->count() > 0) globals.grid = grid;
    if (tol_opt->count() > 0) globals.tol = tol;
    if (threads_opt->count() == 0) {
      if (const char* env = std::getenv("HPD_THREADS")) {
        try {
          globals.threads = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
          throw CLI::ValidationError("HPD_THREADS", "must be a non-negative integer");
        }
      }
    }
    globals.format = format == "csv" ? hpdtool::Format::csv : hpdtool::Format::json;
  });
  hpdtool::register_commands(app, globals, outcome);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  } catch (const hpd::CheckFailed& e) {
    std::cerr << "hpdtool: check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const hpd::InputError& e) {
    std::cerr << "hpdtool: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const hpd::CapacityError& e) {
    std::cerr << "hpdtool: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "hpdtool: internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  nlohmann::json args = nlohmann::json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  nlohmann::json provenance = {{"tool", "hpdtool"},
                               {"version", HPD_VERSION},
                               {"command", outcome.command},
                               {"args", args},
                               {"seed", globals.seed},
                               {"threads", globals.threads},
                               {"grid", globals.grid ? nlohmann::json(*globals.grid) : nlohmann::json(nullptr)},
                               {"tol", globals.tol ? nlohmann::json(*globals.tol) : nlohmann::json(nullptr)}};

  std::string text;
  if (globals.format == hpdtool::Format::csv) {
    if (outcome.csv) {
      text = *outcome.csv;
    } else {
      text = "key,value\n";
      flatten(outcome.result, "", text);
    }
  } else {
    const nlohmann::json doc = {{"provenance", provenance}, {"result", outcome.result}, {"passed", outcome.passed}};
    text = doc.dump(2) + "\n";
  }

  if (globals.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(globals.out, std::ios::binary);
    if (!file) {
      std::cerr << "hpdtool: invalid input: cannot write " << globals.out << "\n";
      return kExitInvalidInput;
    }
    file << text;
  }
  return outcome.passed ? kExitOk : kExitCheckFailed;
}

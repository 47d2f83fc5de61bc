#pragma once

#include <CLI11.hpp>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

namespace hpdtool {

enum class Format { json, csv };

struct Globals {
  std::optional<std::size_t> grid;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
  Format format = Format::json;
};

// What a subcommand produced. `passed` drives the exit code; `csv` is set
// by commands with a native table form.
struct Outcome {
  std::string command;
  nlohmann::json result;
  bool passed = true;
  std::optional<std::string> csv;
};

void register_commands(CLI::App& app, const Globals& globals, Outcome& outcome);

}  // namespace hpdtool

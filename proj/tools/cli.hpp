#pragma once

#include "trideform/io.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace trideform::cli {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct Report {
  std::string command;
  Status verdict = Status::fail;
  json details = json::object();
};

/// 0 pass, 1 fail, 2 inconclusive. Input errors exit with 3.
int exit_code(Status s);
constexpr int input_error_exit = 3;

struct Options {
  std::string algebra;
  std::string base;
  std::vector<std::string> cochains;
  std::string derivation;
  std::vector<std::string> flats;
  std::string generator;
  std::optional<std::size_t> word_bound;
  std::optional<std::size_t> degree;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& command_names();

/// Runs one command. Throws InputError (or another exception) on bad input.
Report run_command(const std::string& command, const Options& options);

json report_to_json(const Report& r);

/// Full entry point: parses argv, writes the report to out and diagnostics to
/// err, returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace trideform::cli

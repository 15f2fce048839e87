#pragma once

#include <optional>
#include <string>

#include "problem.hpp"

namespace nart::cli {

enum class ChevalleyModeFlag { exact, truncated };

struct RunOptions {
  std::optional<unsigned> order;
  std::optional<unsigned> working_order;
  ChevalleyModeFlag mode = ChevalleyModeFlag::exact;
};

// Runs the task and returns the report text. Library errors propagate.
std::string run(const ProblemFile& problem, const RunOptions& options = {});

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Parse, run and map failures onto exit codes 1 (input or module error) and
// 2 (internal invariant violation).
Outcome execute(std::string_view text, const RunOptions& options = {});

}  // namespace nart::cli

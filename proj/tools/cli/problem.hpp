#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nart/elimination.hpp"
#include "nart/hensel.hpp"
#include "nart/morphism.hpp"
#include "nart/text.hpp"

namespace nart::cli {

// Malformed problem text: syntax, undeclared names, bad field or ring.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct HenselDecl {
  HenselCode code;
  std::string unknown_name;
};

struct TaskArg {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Task {
  std::string verb;
  std::vector<TaskArg> args;
  std::map<std::string, std::string> params;
  std::size_t line = 0;
};

struct ProblemFile {
  Field field = Field::rationals();
  RingPtr ring;
  std::optional<unsigned> precision;
  std::map<std::string, ExprValue, std::less<>> series;
  std::map<std::string, HenselDecl, std::less<>> hensel;
  std::map<std::string, std::vector<std::vector<ExprValue>>, std::less<>> matrices;
  std::map<std::string, std::vector<ExprValue>, std::less<>> vectors;
  std::map<std::string, std::vector<std::size_t>, std::less<>> nestings;
  std::map<std::string, PolyIdeal, std::less<>> ideals;
  std::map<std::string, PolyModule, std::less<>> modules;
  std::map<std::string, AlgebraMorphism, std::less<>> morphisms;
  Task task;

  // Ring of the x-block and of the y-block (the latter null without y).
  RingPtr x_ring() const;
  RingPtr y_ring() const;
};

ProblemFile parse_problem(std::string_view text);

const std::vector<std::string>& task_verbs();

}  // namespace nart::cli

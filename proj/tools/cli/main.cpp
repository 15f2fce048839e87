#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nart: nested approximation toolkit"};
  std::string input = "-";
  std::optional<unsigned> order;
  std::optional<unsigned> working_order;
  std::string mode = "exact";
  bool timing = false;
  app.add_option("problem", input, "Problem file, '-' for stdin");
  app.add_option("--order", order, "Override the precision c");
  app.add_option("--working-order", working_order, "Working order c' for comparators, D for chevalley");
  app.add_option("--mode", mode, "Chevalley mode")->check(CLI::IsMember({"exact", "truncated"}));
  app.add_flag("--timing", timing, "Report wall time on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "input error: cannot open " << input << '\n';
      return 1;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  nart::cli::RunOptions options;
  options.order = order;
  options.working_order = working_order;
  options.mode = mode == "truncated" ? nart::cli::ChevalleyModeFlag::truncated : nart::cli::ChevalleyModeFlag::exact;
  if (order && *order == 0) {
    std::cerr << "input error: --order must be positive\n";
    return 1;
  }

  auto start = std::chrono::steady_clock::now();
  auto outcome = nart::cli::execute(text, options);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  if (timing) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "time: " << dt.count() << " s\n";
  }
  return outcome.exit_code;
}

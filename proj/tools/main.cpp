#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const chardeg::cli::CommandResult result = chardeg::cli::run(args, std::cerr);
  std::cout << result.output;
  return result.exit_code;
}

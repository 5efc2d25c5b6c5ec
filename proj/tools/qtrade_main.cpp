#include <iostream>

#include "qtrade/cli.hpp"

int main(int argc, char** argv) {
  const auto outcome = qtrade::cli::run({argv + 1, argv + argc});
  std::cout << outcome.out;
  if (!outcome.err.empty()) std::cerr << outcome.err << '\n';
  return outcome.exit_code;
}

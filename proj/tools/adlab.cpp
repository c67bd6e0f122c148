#include <iostream>

#include "adlab/cli.hpp"

int main(int argc, char** argv) {
  const auto result = adlab::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << result.out;
  if (!result.err.empty()) std::cerr << result.err << "\n";
  return result.exit_code;
}

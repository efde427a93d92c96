#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  addcomp::cli::Environment env;
  try {
    env = addcomp::cli::read_environment();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return addcomp::cli::kUsageError;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return addcomp::cli::run(args, std::cout, std::cerr, env);
}

// branchq: graded branching / tensor-product coefficients for classical groups.
#include <iostream>
#include <string>
#include <vector>

#include <branchq/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return branchq::run_cli(std::move(args), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

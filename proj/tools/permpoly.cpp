#include <exception>
#include <iostream>

#include "permpoly/cli.hpp"

int main(int argc, char** argv) {
  try {
    return permpoly::cli::run(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return permpoly::cli::kContradiction;
  }
}

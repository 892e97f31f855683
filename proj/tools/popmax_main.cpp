#include <iostream>

#include "popmax/cli.hpp"

int main(int argc, char** argv) {
  return popmax::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}

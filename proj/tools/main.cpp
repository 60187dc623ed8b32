#include <iostream>

#include "tropdet/cli.hpp"

int main(int argc, char** argv) {
  return tropical::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}

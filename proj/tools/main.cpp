#include <iostream>

#include "tropmod/cli.hpp"

int main(int argc, char** argv) {
  return tropmod::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout);
}

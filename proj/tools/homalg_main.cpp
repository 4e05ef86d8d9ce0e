#include <iostream>

#include "homalg/cli.hpp"

int main(int argc, char** argv) {
  return homalg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

#include <cstdlib>
#include <iostream>

#include "hirz/cli.hpp"

int main(int argc, char** argv) {
  return hirz::run_cli(argc, argv, std::cout, std::cerr, std::getenv("HIRZ_ORDER"));
}

#include <iostream>

#include "jgeo/cli.hpp"

int main(int argc, char** argv) {
  return jgeo::run_cli(argc, argv, std::cout, std::cerr);
}

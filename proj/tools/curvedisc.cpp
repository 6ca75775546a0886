#include <iostream>

#include "curvedisc/cli.hpp"

int main(int argc, char** argv) {
  auto [config, code] = curvedisc::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!config) return code;
  return curvedisc::cli::run(*config, std::cout, std::cerr);
}

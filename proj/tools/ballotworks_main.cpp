#include <iostream>

#include "ballotworks/cli.hpp"

int main(int argc, char** argv) {
  return ballotworks::cli_run(argc, argv, std::cout, std::cerr);
}

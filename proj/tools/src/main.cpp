#include <iostream>

#include "cgw_cli/cli.hpp"

int main(int argc, char** argv) {
  return cgw::cli::run(argc, argv, std::cout, std::cerr);
}

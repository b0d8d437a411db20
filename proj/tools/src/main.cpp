#include <iostream>

#include "incidence_cli/cli.hpp"

int main(int argc, char** argv) {
  return incidence::cli::main_entry(argc, argv, std::cout, std::cerr);
}

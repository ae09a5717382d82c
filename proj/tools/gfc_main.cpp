#include <iostream>

#include "gfc/cli.hpp"

int main(int argc, char** argv) {
  return gfc::cli::main_entry(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "zcat/cli.hpp"

int main(int argc, char** argv) {
  return zcat::cli::main_entry(argc, argv, std::cout, std::cerr);
}

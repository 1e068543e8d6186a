#include <iostream>

#include "mqdr/cli.hpp"

int main(int argc, char** argv) {
  return mqdr::cli::run(argc, argv, std::cout, std::cerr);
}

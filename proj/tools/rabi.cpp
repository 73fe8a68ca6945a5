#include <iostream>

#include "rabi/cli.hpp"

int main(int argc, char** argv) {
  return rabi::cli::run(argc, argv, std::cout, std::cerr);
}

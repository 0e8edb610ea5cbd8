#include <iostream>

#include "bentguide/cli.hpp"

int main(int argc, char** argv) {
  return bentguide::cli::run(argc, argv, std::cout, std::cerr);
}

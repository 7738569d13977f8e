#include <iostream>

#include "corestat/cli.hpp"

int main(int argc, char** argv) {
  return corestat::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}

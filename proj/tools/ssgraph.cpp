#include <iostream>

#include "selfsim/cli.hpp"

int main(int argc, char** argv) {
  return selfsim::run_cli({argv, argv + argc}, std::cin, std::cout, std::cerr);
}

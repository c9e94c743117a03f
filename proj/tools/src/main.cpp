#include <iostream>

#include "ramfil/cli/run.hpp"

int main(int argc, char** argv) {
  return ramfil::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}

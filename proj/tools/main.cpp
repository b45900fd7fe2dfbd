#include <iostream>
#include <string>
#include <vector>

#include "app.hpp"

int main(int argc, char** argv) {
  tadpole::cli::install_interrupt_handler();
  std::vector<std::string> args(argv + 1, argv + argc);
  return tadpole::cli::run(args, std::cout, std::cerr);
}

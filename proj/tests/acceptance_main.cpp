#include <iostream>

#include "spinor/toolkit.hpp"

int main(int argc, char** argv) {
  spinor::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--quick") opt.quick = true;
  }
  return spinor::run_acceptance(std::cout, opt) == 0 ? 0 : 1;
}

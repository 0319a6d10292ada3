#include "polycond/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return polycond::run_cli(args, std::cout, std::cerr);
}

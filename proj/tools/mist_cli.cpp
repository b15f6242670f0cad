#include <iostream>

#include "mist/cli.hpp"

int main(int argc, char** argv) {
  return mist::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

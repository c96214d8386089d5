#include <iostream>
#include <string>
#include <vector>

#include "biframe/cli.hpp"

int main(int argc, char** argv) {
  return biframe::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

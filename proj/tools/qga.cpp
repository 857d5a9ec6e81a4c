#include <iostream>

#include "qga/cli/cli.hpp"

int main(int argc, char** argv) {
  return qga::cli::execute_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

#include <vector>

#include "fsr/cli.hpp"

int main(int argc, char** argv) {
  return fsr::run_cli(std::vector<std::string>(argv, argv + argc));
}

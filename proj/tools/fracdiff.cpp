#include <string>
#include <vector>

#include "fracdiff/cli.hpp"

int main(int argc, char** argv) {
  return fracdiff::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}

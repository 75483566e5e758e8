#include <string>
#include <vector>

#include "gsteer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gsteer::cli::run(args);
}

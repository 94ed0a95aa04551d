#include <iostream>
#include <string>
#include <vector>

#include "fig8cv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fig8cv::cli::run_cli(args, std::cout, std::cerr);
}

#include <iostream>

#include "osg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return osg::cli_main(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "gsp4kit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gsp4kit::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "convcode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return convcode::run_command(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "rsinf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rsinf::cli::run(args, std::cout, std::cerr);
}

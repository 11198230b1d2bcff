#include <iostream>
#include <string>
#include <vector>

#include "rrcf/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return rrcf::cli::run(args, std::cout, std::cerr);
}

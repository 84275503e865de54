#include <iostream>
#include <string>
#include <vector>

#include "descentkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return descentkit::cli::run(args, std::cout, std::cerr);
}

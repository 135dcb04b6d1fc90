#include <iostream>
#include <string>
#include <vector>

#include "nlkg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return nlkg::cli::run(args, std::cout, std::cerr);
}

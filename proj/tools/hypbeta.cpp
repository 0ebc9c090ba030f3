#include <iostream>

#include "hypbeta/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hypbeta::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "rlk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rlk::run_cli(std::move(args), std::cout, std::cerr);
}

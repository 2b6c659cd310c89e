#include <iostream>
#include <vector>

#include "slq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return slq::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "borelss/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return borelss::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "fruit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fruit::run_cli(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "prelie/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return prelie::cli::run(args, std::cout, std::cerr);
}

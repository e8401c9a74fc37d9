#include <iostream>
#include <vector>

#include "latgon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return latgon::cli::run(args, std::cout, std::cerr);
}

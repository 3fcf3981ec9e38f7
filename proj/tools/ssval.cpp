#include <iostream>

#include "ssval/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ssval::cli::run(args, std::cout, std::cerr);
}

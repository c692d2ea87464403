#include <iostream>
#include <string>
#include <vector>

#include "circword/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return circword::cli::run(std::move(args), std::cout, std::cerr);
}

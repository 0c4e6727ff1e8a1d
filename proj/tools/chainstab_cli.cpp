#include <iostream>
#include <string>
#include <vector>

#include "chainstab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return chainstab::cli::run(args, std::cout, std::cerr);
}

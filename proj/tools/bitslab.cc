#include <iostream>
#include <string>
#include <vector>

#include "bitslab/cli.h"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bitslab::cli::run(args, std::cout, std::cerr);
}

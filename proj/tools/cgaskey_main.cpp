#include <iostream>

#include "cgaskey/cli.hpp"

int main(int argc, char** argv) {
    return cgaskey::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}

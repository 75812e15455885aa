#include <iostream>

#include "jtc/cli.hpp"

int main(int argc, char** argv) {
    return jtc::cli::run(argc, argv, std::cout, std::cerr);
}

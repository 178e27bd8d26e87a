#include <iostream>

#include "dalvf/cli.hpp"

int main(int argc, char** argv) {
    return dalvf::cli::run(argc, argv, std::cout, std::cerr);
}

#include <iostream>

#include "polychrome/cli.hpp"

int main(int argc, char** argv)
{
    return polychrome::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}

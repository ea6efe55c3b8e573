#include <iostream>

#include "algz/cli.hpp"

int main(int argc, char **argv)
{
    return algz::cli::run(argc, argv, std::cin, std::cout);
}

#include "affweights/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return affweights::cli::run(argc, argv, std::cout, std::cerr);
}

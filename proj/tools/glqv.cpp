#include <iostream>

#include "glqv/cli.hpp"

int main(int argc, char** argv)
{
    return glqv::cli::main_entry(argc, argv, std::cout, std::cerr);
}

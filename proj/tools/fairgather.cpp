#include <iostream>
#include <string>
#include <vector>

#include "fairgather/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return fairgather::cli::run(args, std::cout, std::cerr);
}

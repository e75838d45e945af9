#include <iostream>
#include <string>
#include <vector>

#include "catode/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return catode::run_cli(args, std::cout, std::cerr);
}

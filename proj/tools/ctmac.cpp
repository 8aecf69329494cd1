#include <iostream>

#include <ctmac/cli.hpp>

int main(int argc, char **argv)
{
    return ctmac::run_cli(argc, argv, std::cout, std::cerr);
}

/**
 * polder_main.cpp - Thin executable wrapper around polder::run_cli.
 */

#include <iostream>
#include <string>
#include <vector>

#include "polder/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polder::run_cli(args, std::cout, std::cerr);
}

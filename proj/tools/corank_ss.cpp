#include <iostream>

#include "corank/cli/app.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return corank::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "pals/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pals::cli_run(args, std::cout, std::cerr);
}

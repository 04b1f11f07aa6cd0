#include <iostream>
#include <vector>

#include "eulink/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eulink::cli::run(args, std::cout);
}

#include <iostream>
#include <string>
#include <vector>

#include "cutpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cutpoly::run(args, std::cout, std::cerr);
}

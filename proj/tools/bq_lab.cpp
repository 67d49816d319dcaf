#include "bq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return bq::cli::run(argc, argv, std::cout, std::cerr);
}

// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "csr/cli.hpp"

int main(int argc, char** argv) {
    return csr::run_cli(argc, argv, std::cout, std::cerr);
}

#include "qchain/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qchain::cli::run(argc, argv, std::cout, std::cerr); }

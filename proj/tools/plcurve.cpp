#include <iostream>

#include "plcurve/cli.hpp"

int main(int argc, char** argv) { return plc::cli::run(argc, argv, std::cout, std::cerr); }

#include "qcurv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qcurv::run_cli(argc, argv, std::cout, std::cerr); }

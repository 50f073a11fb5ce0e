#include <iostream>

#include "tropical/run.hpp"

int main(int argc, char** argv) { return tropical::run_main(argc, argv, std::cout, std::cerr); }

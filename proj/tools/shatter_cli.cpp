#include <iostream>

#include "shatter/commands.hpp"

int main(int argc, char** argv) { return shatter::cli::run(argc, argv, std::cout, std::cerr); }

#include "cli.hpp"

int main(int argc, char** argv) { return glg::cli::run(argc, argv, std::cout, std::cerr); }

#include "equicat/cli.hpp"

int main(int argc, char** argv) { return equicat::cli_main(argc, argv); }

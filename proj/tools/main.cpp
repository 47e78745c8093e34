#include "heckelab/cli/cli.hpp"

int main(int argc, char** argv) { return heckelab::cli::main(argc, argv); }

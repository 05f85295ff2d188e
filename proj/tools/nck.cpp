#include "cli.hpp"

int main(int argc, char** argv) { return nck::cli::main(argc, argv); }

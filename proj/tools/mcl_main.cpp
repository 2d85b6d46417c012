#include "mcl/cli/commands.hpp"

int main(int argc, char** argv) { return mcl::cli::main(argc, argv); }

#include "novcoh/cli.hpp"

int main(int argc, char** argv) { return novcoh::cli::main(argc, argv); }

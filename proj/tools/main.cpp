#include "ssp/cli.hpp"

int main(int argc, char** argv) { return ssp::cli_main(argc, argv); }

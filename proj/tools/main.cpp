#include "pba/cli.hpp"

int main(int argc, char** argv) { return pba::cli_main(argc, argv); }

#include "minksim/cli.hpp"

int main(int argc, char** argv) { return minksim::run_cli(argc, argv); }

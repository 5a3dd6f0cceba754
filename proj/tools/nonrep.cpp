#include "nonrep/cli.hpp"

int main(int argc, char** argv) { return nonrep::run_cli(argc, argv); }

#include "localsep/cli.hpp"

int main(int argc, char** argv) { return localsep::cli::run(argc, argv); }

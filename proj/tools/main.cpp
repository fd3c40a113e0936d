#include "xsigma/cli.hpp"

int main(int argc, char** argv) { return xsigma::cli::run(argc, argv); }

#include "mim_cli.hpp"

int main(int argc, char** argv) { return mim::cli::run(argc, argv); }

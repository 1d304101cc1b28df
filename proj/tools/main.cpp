#include "cli.hpp"

int main(int argc, char** argv) { return entlab::cli::run({argv, argv + argc}); }

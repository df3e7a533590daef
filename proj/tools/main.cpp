#include "cli.hpp"

int main(int argc, char** argv) { return far::cli::run(argc, argv); }

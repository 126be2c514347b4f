#include "srnet/cli.hpp"

int main(int argc, char** argv) { return srnet::cli::run(argc, argv); }

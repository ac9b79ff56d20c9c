#include "evogame/cli.hpp"

int main(int argc, char** argv) { return evogame::cli_main(argc, argv); }

#include "piexp/cli.hpp"

int main(int argc, char** argv) { return piexp::run_main(argc, argv); }

#include "dysthe/runner.hpp"

int main(int argc, char** argv) { return dysthe::run_cli(argc, argv); }

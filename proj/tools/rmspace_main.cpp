#include "rmspace/cli.hpp"

int main(int argc, char** argv) { return rmspace::run(argc, argv); }

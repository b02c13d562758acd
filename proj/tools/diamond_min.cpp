#include "diamond/config.hpp"

int main(int argc, char **argv) { return diamond::run_cli(argc, argv); }

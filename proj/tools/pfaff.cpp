#include "pfaff/cli/cli.hpp"

int main(int argc, char** argv) { return pfaff::cli::run(argc, argv); }

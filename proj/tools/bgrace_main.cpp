#include "bgrace/cli.hpp"

int main(int argc, char** argv) { return bgrace::cli::run(argc, argv); }

#include "exlp/cli.hpp"

int main(int argc, char** argv) { return exlp::cli::run(argc, argv); }

#include <grovelab/cli.hpp>

int main(int argc, char** argv) { return grovelab::cli::run(argc, argv); }

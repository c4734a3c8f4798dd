#include <qholo/cli.hpp>

int main(int argc, char** argv) { return qholo::cli::run(argc, argv); }

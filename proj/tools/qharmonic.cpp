#include <qharmonic/cli.hpp>

int main(int argc, char** argv) { return qharmonic::cli::main_entry(argc, argv); }

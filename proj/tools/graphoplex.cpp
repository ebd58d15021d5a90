#include "commands.hpp"

int main(int argc, char** argv) { return gpx::cli::run(argc, argv); }

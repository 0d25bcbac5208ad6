#include "qgrkz/cli/app.hpp"

int main(int argc, char** argv) { return qgrkz::cli::run(argc, argv); }

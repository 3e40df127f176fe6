#include "mobispread/cli.hpp"

int main(int argc, char** argv) { return mobispread::cli::run(argc, argv); }

#include "run.hpp"

int main(int argc, char** argv) { return ehv::cli::run(argc, argv); }

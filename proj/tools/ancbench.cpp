#include "anc/harness.hpp"

int main(int argc, char** argv) { return anc::cli_main(argc, argv); }

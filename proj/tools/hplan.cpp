#include "topoplan/scene_io.hpp"

int main(int argc, char** argv) { return topo::run_cli(argc, argv); }

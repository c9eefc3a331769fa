#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) { return cylrad::app::run(argc, argv, std::cout, std::cerr); }

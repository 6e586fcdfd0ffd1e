#include <iostream>

#include "plurikit/acceptance.hpp"

int main() { return plurikit::run_acceptance(std::cout, false, 1, "data"); }

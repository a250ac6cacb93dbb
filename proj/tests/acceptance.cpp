// Runs the full verification matrix and prints one pass/fail line per
// criterion. Nonzero exit on any failure.

#include "isoext/suite.hpp"

#include <iostream>

int main() { return isoext::run_acceptance_main(std::cout); }

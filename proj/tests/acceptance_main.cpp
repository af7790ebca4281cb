// Acceptance gate: one PASS/FAIL line per criterion; nonzero exit on failure.

#include <iostream>

#include "bsg/acceptance.hpp"

int main() {
    return bsg::run_acceptance(std::cout) == 0 ? 0 : 1;
}

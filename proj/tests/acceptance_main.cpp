// Acceptance gate: runs every criterion at zero tolerance and prints one
// pass/fail line per criterion. Nonzero exit on any failure.
#include <iostream>

#include "hexad/acceptance.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : hexad::Catalog::default_root();
    try {
        hexad::Catalog catalog(dir);
        auto results = hexad::run_acceptance(catalog);
        return hexad::report_acceptance(results, std::cout) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance suite aborted: " << e.what() << "\n";
        return 2;
    }
}

#include <iostream>

#include "mmv/acceptance.hpp"

int main() {
    auto results = mmv::run_acceptance(std::cout, 50);
    return mmv::all_passed(results) ? 0 : 1;
}

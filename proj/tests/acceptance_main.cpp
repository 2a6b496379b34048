// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <iostream>

#include "ajtorus/acceptance.hpp"

int main() {
    bool all = true;
    ajt::run_acceptance({}, [&all](const ajt::CriterionResult& r) {
        std::cout << ajt::format_result(r) << std::endl;
        all = all && r.pass;
    });
    return all ? 0 : 1;
}

// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdlib>
#include <iostream>

#include "ahs/suites.hpp"

using namespace ahs;

int main(int argc, char** argv) {
    const char* cache = std::getenv("AHS_CACHE");
    Workspace ws(cache ? cache : "");
    SuiteParams p;
    int failed = 0;
    for (int k = 1; k <= 9; ++k) {
        if (argc > 1 && std::atoi(argv[1]) != k) continue;
        const std::string& name = criterionSuite(k);
        Report r = runSuite(name, p, ws);
        if (!r.pass()) {
            ++failed;
            std::cerr << reportText(r);
        }
        std::cout << "criterion " << k << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << name << ")" << std::endl;
    }
    ws.saveCache();
    return failed ? 1 : 0;
}

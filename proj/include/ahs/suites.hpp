#pragma once

// Named verification suites and their reports.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahs/classical.hpp"

namespace ahs {

struct SuiteParams {
    std::vector<int> nList{2, 3};
    std::vector<int> rList{1, 2, 3};
    int maxDim = 0;  // 0: the suite's own default
    std::uint64_t seed = 20240611;
    bool timing = false;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::int64_t cases = 0;
    std::map<std::string, std::int64_t> counters;
    std::vector<nlohmann::json> counterexamples;  // first few only
    std::string error;
    double seconds = 0;

    void expect(bool ok, const nlohmann::json& where);
    void count(const std::string& key, std::int64_t by = 1) { counters[key] += by; }
    // Fails unless every listed counter is positive.
    void requireCoverage(const std::vector<std::string>& keys);
};

struct Report {
    std::string suite;
    SuiteParams params;
    std::vector<CheckResult> checks;
    CacheStats cache;
    double seconds = 0;
    bool pass() const;
};

// Engines for one n, built on demand and shared across suites.
struct Context {
    explicit Context(int n, OracleConfig cfg) : oracle(n, cfg), engine(oracle), modified(engine) {}
    QuiverOracle oracle;
    DoubleHallEngine engine;
    ModifiedAlgebra modified;
};

class Workspace {
public:
    explicit Workspace(std::string cachePath = "", OracleConfig cfg = {});
    Context& at(int n);
    void saveCache() const;
    CacheStats stats() const;
    const std::string& cachePath() const { return path_; }

private:
    std::string path_;
    OracleConfig cfg_;
    std::map<int, std::unique_ptr<Context>> ctx_;
};

const std::vector<std::string>& suiteNames();  // excludes "all"
// Suite covering acceptance criterion k (1..9).
const std::string& criterionSuite(int k);

// Throws InvalidArgument for an unknown name.
Report runSuite(const std::string& name, const SuiteParams& params, Workspace& ws);

nlohmann::json reportJson(const Report& r);
std::string reportText(const Report& r);

}  // namespace ahs

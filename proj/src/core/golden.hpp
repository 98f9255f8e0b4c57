#ifndef EDSFN_CORE_GOLDEN_HPP
#define EDSFN_CORE_GOLDEN_HPP

#include <string>
#include <vector>

#include "report.hpp"

namespace edsfn {

/// Fixture ids, each with `<id>.curve` and `<id>.facts.json` in the fixture directory.
const std::vector<std::string>& fixture_ids();

/// Compiled-in fixture directory, overridden by the EDSFN_FIXTURE_DIR environment variable.
std::string default_fixture_dir();

AnyCurve load_fixture_curve(const std::string& id, const std::string& dir);

struct FactResult {
    std::string key;
    std::string provenance;  // "reference" (stated with the example), "derived" or "trivial"
    std::string note;
    Json expected;
    Json actual;
    bool pass = false;
};

struct ReproResult {
    std::string id;
    std::vector<FactResult> facts;
    bool pass = false;  // every fact matched
    double seconds = 0;
};

/// Computes the facts of one fixture and compares them with its expectation
/// file. A "ratfunc" fact compares rational functions after parsing both sides.
ReproResult run_repro(const std::string& id, const std::string& dir);

Json repro_json(const ReproResult& r);

}  // namespace edsfn

#endif

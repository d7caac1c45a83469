#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/search.hpp"

namespace mdim {

// One reproduction check. `source` says where the expected value comes from:
// "closed-form" (a stated formula), "fixed-table" (a hardcoded construction
// table), "enumeration" (independent brute force), or "bound" (an inequality
// the computation must satisfy).
struct CheckResult {
    std::string name;
    std::string expected;
    std::string got;
    std::string source;
    bool pass = false;
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;  // sorted by name
    bool all_pass() const;
};

// Runs every check whose name contains `filter` (all when empty).
VerifyReport run_verify(const std::string& filter = "");

// "PASS|FAIL <name> expected=<v> got=<v> source=<s> elapsed_ms=<t>" per check
// plus a trailing summary line.
void print_report(std::ostream& out, const VerifyReport& report);

// The deterministic graph corpus the property-style checks sweep over.
struct CorpusEntry {
    std::string name;
    Graph graph;
};
const std::vector<CorpusEntry>& corpus();

// Independent oracle: smallest resolving (or edge resolving) set size found
// by enumerating all vertex subsets in increasing size order, comparing
// distance codes straight from the matrix. Kept free of the search and
// resolving modules on purpose.
int exhaustive_min_resolving(const Graph& g, const DistMatrix& d, PairMode mode);

}  // namespace mdim

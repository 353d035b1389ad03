#pragma once

#include <string>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

struct VerifyOptions {
    int nmax = 5;
    std::vector<int> ks;
    std::vector<int> rs;
    int count = 100;     // random-instance theorems
    unsigned seed = 1;
    int workers = 1;
    int cap = 7;
};

struct VerifyRow {
    int n = 0, k = 0, r = 0;
    std::string extremal;  // observed quantity for the row
    std::string bound;     // theorem right-hand side
    std::string status;    // holds | out-of-domain | FAILURE
};

struct VerificationReport {
    std::string theorem;
    std::vector<VerifyRow> rows;
    int holds = 0;
    int out_of_domain = 0;
    int failures = 0;
    std::vector<std::string> witnesses;  // serialized counterexamples
};

// Known ids: main2conn, mainpaths, nsp, kopylov, lham, kpath, lift, shrink,
// pathcomp, cutedge.
std::vector<std::string> known_theorems();
VerificationReport verify_theorem(const std::string& id, const VerifyOptions& opt);

// CSV: theorem,n,k,r,extremal,bound,status (one row per grid point).
std::string report_to_csv(const VerificationReport& rep);

}  // namespace berge

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sing/invariants.hpp"

namespace sing {

/// One family line of a batch spec:
///   template=x^a+y^b+t*x^c*y^d ranges=a:3..6,b:3..6 coeff=t:-2..2 [vars=x,y]
struct FamilyLine {
    std::string template_text;
    std::vector<std::string> vars{"x", "y"};
    std::vector<std::tuple<std::string, long, long>> ranges;  // exponent placeholders
    std::vector<std::tuple<std::string, long, long>> coeffs;  // coefficient placeholders
};

FamilyLine parse_family_line(const std::string& line);

struct BatchInstance {
    std::string family;                      // the template text
    std::map<std::string, long> assignment;  // placeholder values
    std::string poly_text;                   // substituted polynomial
    std::vector<std::string> vars;
    std::string key;                         // stable record key
};

std::vector<BatchInstance> expand_family(const FamilyLine& line);

struct BatchSummary {
    std::uint64_t total = 0;
    std::uint64_t analyzed = 0;
    std::uint64_t skipped_existing = 0;
    std::uint64_t quasihomogeneous = 0;
    std::uint64_t not_isolated = 0;
    std::uint64_t conjecture_violations = 0;
    std::uint64_t bound_failures = 0;
    std::uint64_t errors = 0;
};

/// Runs every instance of every family line in `family_path`, appending one
/// self-contained JSON record per line to `out_path`. Idempotent: records
/// already present (by key) are skipped. Per-instance failures are recorded
/// in the record's error field and never abort the batch.
BatchSummary run_batch(const std::string& family_path, const std::string& out_path,
                       unsigned jobs, const CheckSet& checks);

}  // namespace sing

#ifndef TRIEVEN_VERIFY_HPP
#define TRIEVEN_VERIFY_HPP

#include <iosfwd>
#include <string>

namespace trieven {

struct SuiteOptions {
    int jobs = 1;
    double budget_seconds = 0;  // 0 = unlimited; applies to the pipeline suites
    std::string out_dir;        // checkpoint/report directory, empty = none
    std::ostream* log = nullptr;
};

// Each suite returns true on a clean pass and writes diagnostics to opts.log.
bool verify_forms(const SuiteOptions& opts);
bool verify_radicals(const SuiteOptions& opts);
bool verify_constructions(const SuiteOptions& opts);
bool verify_symmetry_small(const SuiteOptions& opts);
bool verify_table1(const SuiteOptions& opts);
bool verify_classify48(const SuiteOptions& opts);
bool verify_table2(const SuiteOptions& opts);

// Structural checks on the final representatives: a weight-24 word in each,
// the dual weight-2 graph shape, and the minimum dual weight of the padded
// triangular code. Not a CLI suite; exercised by the acceptance tests.
bool verify_proof_devices(const SuiteOptions& opts);

/// Dispatch by CLI suite name; throws std::invalid_argument on unknown names.
bool run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace trieven

#endif

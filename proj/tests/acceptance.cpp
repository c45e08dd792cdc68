// acceptance harness: one pass/fail line per criterion
// usage: acceptance [T1 T2 ...]   (default: all)
#include <cstring>
#include <iostream>
#include <map>
#include <vector>

#include "trieven/verify.hpp"

using namespace trieven;

int main(int argc, char** argv) {
    SuiteOptions opts;
    opts.jobs = 8;
    opts.log = nullptr; // keep the one-line-per-criterion contract
    if (const char* j = std::getenv("ACCEPTANCE_JOBS")) opts.jobs = std::atoi(j);
    if (const char* v = std::getenv("ACCEPTANCE_VERBOSE"))
        if (std::strcmp(v, "0") != 0) opts.log = &std::cerr;

    struct Criterion {
        const char* tag;
        const char* what;
        bool (*run)(const SuiteOptions&);
    };
    const std::vector<Criterion> criteria = {
        {"T1", "forms and radicals",
         [](const SuiteOptions& o) { return verify_forms(o) && verify_radicals(o); }},
        {"T2", "constructions", &verify_constructions},
        {"T3", "small symmetry machinery", &verify_symmetry_small},
        {"T4", "subcode descent counts", &verify_table1},
        {"T5", "length-48 classification", &verify_classify48},
        {"T6", "shortened lengths 8..40", &verify_table2},
        {"T7", "structural checks on the classes", &verify_proof_devices},
    };

    std::vector<std::string> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(argv[i]);

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (!wanted.empty() &&
            std::find(wanted.begin(), wanted.end(), c.tag) == wanted.end())
            continue;
        bool ok = false;
        std::string detail;
        try {
            ok = c.run(opts);
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        std::cout << c.tag << " " << c.what << ": " << (ok ? "pass" : "FAIL")
                  << detail << std::endl;
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

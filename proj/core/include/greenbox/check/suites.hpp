#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace greenbox::check {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0 && passed > 0; }
    void expect(bool cond, const std::string& what);
};

struct SuiteOptions {
    std::uint64_t seed = 20260101;
    std::size_t triples = 1000;  // random triples per family for associativity
};

struct Suite {
    std::string name;
    std::function<SuiteResult(const SuiteOptions&)> run;
};

// Invariant suites in a fixed order:
//   associativity, star, family-closure, jcell-sizes, closure-agreement,
//   closed-counts, rsk, characters, dihedral.
const std::vector<Suite>& suites();

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace greenbox::check

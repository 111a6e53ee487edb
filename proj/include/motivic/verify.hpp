#pragma once

// Property suites over built-in corpora, shared by `motivic verify` and the
// acceptance runner.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motivic/variety.hpp"

namespace motivic {

struct ScissorPair {
    std::uint64_t q;
    std::string ambient;
    std::string closed;
    /// Independent description of the open complement, when one exists in the catalog.
    std::optional<std::string> complement;
};

const std::vector<ScissorPair>& scissor_corpus();

struct CaseResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    bool passed = true;
    std::vector<CaseResult> cases;

    void add(std::string name, bool ok, std::string detail = {});
    std::size_t failures() const;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    CountOptions count;
};

SuiteReport run_scissor_suite(const SuiteOptions& opts = {}, unsigned m_max = 6, std::size_t precision = 10);
SuiteReport run_witt_ring_suite(const SuiteOptions& opts = {}, std::size_t pairs = 500, std::size_t precision = 12);
SuiteReport run_lefschetz_suite(const SuiteOptions& opts = {}, unsigned m_max = 5);
SuiteReport run_hilbert_oracle_suite(const SuiteOptions& opts = {}, std::size_t random_rationals = 200);
/// Rational zeta from counts against the cohomology catalog, q in {3, 5, 7, 9}.
SuiteReport run_zeta_square_suite(const SuiteOptions& opts = {});
/// Euler product of closed points against the measure zeta, q in {2, 3}.
SuiteReport run_euler_suite(const SuiteOptions& opts = {}, std::size_t precision = 10);
/// Two genus-one curves: rational zeta and Weil checks.
SuiteReport run_curve_suite(const SuiteOptions& opts = {});
/// h2 of the swap scenarios for odd q < 200 and under conjugation.
SuiteReport run_h2_table_suite(const SuiteOptions& opts = {});
/// The same scenarios through the odd-prime symbols for p in {3, 5, 7}.
SuiteReport run_odd_blind_suite(const SuiteOptions& opts = {});

std::vector<std::string> suite_names();
/// Throws ValidationError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace motivic

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpolymat/identities.hpp"

namespace qpolymat {

struct CheckLine {
    std::string name;
    bool pass;
    bool skipped = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> lines;

    bool pass() const {
        for (const auto& l : lines)
            if (!l.skipped && !l.pass) return false;
        return true;
    }
};

SuiteReport verify_axioms(const RankMetricCode& C);
SuiteReport verify_duality(const RankMetricCode& C);
SuiteReport verify_greene(const RankMetricCode& C);
SuiteReport verify_inverse_greene(const RankMetricCode& C);
SuiteReport verify_equivalence(const RankMetricCode& C);
SuiteReport verify_cocircuits(const RankMetricCode& C);
SuiteReport verify_singleton(const RankMetricCode& C);
SuiteReport verify_macwilliams(const RankMetricCode& C);
SuiteReport verify_klove(const RankMetricCode& C);
SuiteReport verify_mrd(const RankMetricCode& C);

/// Algebraic lemma suite over q in {2, 3}; the seed drives the randomized
/// instances (q-product associativity, Möbius round trips, bilinearity).
SuiteReport verify_lemmas(std::uint64_t seed);

std::vector<SuiteReport> verify_suite(const std::string& name, const RankMetricCode& C,
                                      std::uint64_t seed);

}  // namespace qpolymat

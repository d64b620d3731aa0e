#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sri/semiring.hpp"

namespace sri {

/// Outcome of one verified law over one semiring: how many concrete
/// instances were examined and which, if any, failed. Diagnostic
/// observations that are not failures (witness searches and the like) land
/// in notes.
struct PropositionResult {
    std::string id;
    std::string summary;
    long instances = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct CheckReport {
    std::string semiring;
    std::vector<PropositionResult> propositions;
    long elapsed_ms = 0;

    long total_instances() const;
    long total_failures() const;
    bool ok() const { return total_failures() == 0; }
};

/// Ids of every verifiable law, in canonical run order.
const std::vector<std::string>& proposition_ids();
const char* proposition_summary(const std::string& id);
bool proposition_applies(const std::string& id, const Semiring& S);

/// Runs the selected laws (empty selection = all applicable) exhaustively
/// over S. The seed only permutes internal iteration order; reports are
/// canonically sorted and therefore seed-independent. Throws
/// unknown_proposition for bad ids.
CheckReport run_checks(const SemiringPtr& S,
                       const std::vector<std::string>& selection = {},
                       std::uint64_t seed = 0);

} // namespace sri

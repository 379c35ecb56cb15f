#pragma once

#include <map>
#include <string>
#include <vector>

#include "pathchrom/dp.hpp"
#include "pathchrom/io.hpp"

namespace pathchrom {

using ClaimParams = std::map<std::string, std::string>;

// Machine-readable verdict for one verified claim. A pass certificate can be
// re-checked through library calls alone, without re-running the search that
// produced it (nonexistence results additionally record the exhaustion they
// came from; only their positive witnesses re-check).
struct ClaimReport {
    enum class Verdict { pass, fail, skipped };

    std::string claim_id;
    ClaimParams parameters;
    Verdict verdict = Verdict::fail;
    std::string reason;        // populated for fail and skipped
    ordered_json certificate;  // payload: witnesses, colorings, cuts, maps
    double elapsed_seconds = 0.0;  // informational only, never serialized
};

const std::vector<std::string>& claim_ids();

// Executes one registered claim. Unknown ids throw invalid_parameter;
// instances beyond a size guard come back skipped, not failed.
ClaimReport run_claim(const std::string& id, const ClaimParams& params = {});

ordered_json report_to_json(const ClaimReport& r);
std::string verdict_name(ClaimReport::Verdict v);

// Validates the checkable payload of a pass report: decompositions, proper
// colorings, embedding maps, cuts and disjoint paths, witness enumerations.
bool recheck_certificate(const ClaimReport& r);

}  // namespace pathchrom

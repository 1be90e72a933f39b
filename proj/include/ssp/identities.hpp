#pragma once

#include <string>
#include <vector>

#include "ssp/schemes.hpp"

namespace ssp {

// Outcome of one identity checked over its full quantifier range for a
// concrete scheme. `applicable` is false when the scheme does not satisfy
// the identity's side conditions (wrong family parameters, diameter too
// small, ...); in that case pass is true and checked is 0.
struct IdentityResult {
    std::string id;
    bool applicable = false;
    bool pass = true;
    long checked = 0;            // number of (i,j,...) tuples tested
    std::string first_failure;   // empty when pass
};

// Runs every identity registered for one scheme's family, plus the
// family-independent recurrence/last-row/self-duality checks.
// Results come back sorted by id.
std::vector<IdentityResult> identity_suite(const SchemeId& scheme);

// Ids known to identity_suite, for CLI listings.
std::vector<std::string> identity_ids_for_family(Family family);

}  // namespace ssp

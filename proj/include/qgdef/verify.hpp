#pragma once

#include "qgdef/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgdef {

struct IdentityCheck {
    std::string identity;
    bool passed = true;
    bool required = true;
    std::optional<int> failing_order;
    std::string detail;
};

struct VerificationReport {
    std::string kind;
    std::vector<IdentityCheck> checks;

    bool passed() const;
    const IdentityCheck* first_failure() const;
};

// Recomputes every identity claimed by a certificate from its payload alone.
VerificationReport verify_certificate(const Json& cert);
Json report_to_json(const VerificationReport& r);

} // namespace qgdef

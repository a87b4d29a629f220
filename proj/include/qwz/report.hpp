#pragma once

#include "qwz/identities.hpp"
#include "qwz/wz.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace qwz {

/// One named check outside the identity registry (certificate, telescoping, ...).
struct CheckReport {
    std::string id;
    /// Text-mode prefix, e.g. "certificate: exact".
    std::string label;
    identities::Status status = identities::Status::Fail;
    wz::CheckOutcome outcome;
    std::vector<std::pair<std::string, std::string>> params;
    long digits_or_order = 0;
};

nlohmann::ordered_json to_json(const identities::VerificationReport& r);
nlohmann::ordered_json to_json(const CheckReport& r);
nlohmann::ordered_json to_json(const identities::IdentityDescriptor& d);

/// Human-readable block for one report. Long series are abbreviated.
void render_text(std::ostream& os, const identities::VerificationReport& r);
/// One line: "<label> PASS|FAIL [witness] (detail)".
void render_text(std::ostream& os, const CheckReport& r);
void render_registry(std::ostream& os, const std::vector<identities::IdentityDescriptor>& list);

}  // namespace qwz

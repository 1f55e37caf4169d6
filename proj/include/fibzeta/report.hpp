#pragma once

#include "fibzeta/identities.hpp"

#include <string>
#include <vector>

namespace fibzeta {

// Header attached to every structured report document.
struct ReportHeader {
    std::string tool_version;
    int precision = 0;
    int tolerance_exponent = 0;
    unsigned long long seed = 0;
    std::string timestamp; // ISO-8601 UTC
};

struct ReportDocument {
    ReportHeader header;
    std::vector<VerificationReport> reports;
};

std::string current_utc_timestamp();

// Structured rendering. Keys are emitted in a fixed order and numbers are
// decimal strings, so parse + re-render is byte identical.
std::string to_json(const ReportDocument& doc);
ReportDocument from_json(const std::string& text);

// Text mode: one aligned row per report, "passed X/Y" footer.
std::string to_text(const ReportDocument& doc);

} // namespace fibzeta

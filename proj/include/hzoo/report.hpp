#pragma once

#include <string>

#include <json.hpp>

#include "hzoo/verify.hpp"
#include "hzoo/version.hpp"

namespace hzoo {

/// JSON report schema:
///   {claim_id, inputs_digest, verdict, witness?, subcases[], tool_version}
/// plus an optional generated_at timestamp added by the CLI unless
/// suppressed.
inline nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json j;
    j["claim_id"] = cert.claim_id;
    j["inputs_digest"] = cert.inputs_digest;
    j["verdict"] = cert.passed ? "pass" : "fail";
    if (cert.witness) j["witness"] = *cert.witness;
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& s : cert.subcases) {
        nlohmann::json js;
        js["id"] = s.id;
        js["verdict"] = s.passed ? "pass" : "fail";
        if (!s.detail.empty()) js["detail"] = s.detail;
        subs.push_back(std::move(js));
    }
    j["subcases"] = std::move(subs);
    j["tool_version"] = kToolVersion;
    return j;
}

inline std::string render_text(const Certificate& cert) {
    std::string out = (cert.passed ? "PASS " : "FAIL ") + cert.claim_id + "  [" +
                      cert.inputs_digest + "]\n";
    for (const auto& s : cert.subcases) {
        out += std::string("  ") + (s.passed ? "pass " : "FAIL ") + s.id;
        if (!s.detail.empty()) out += "  (" + s.detail + ")";
        out += '\n';
    }
    if (cert.witness) out += "  witness: " + *cert.witness + '\n';
    return out;
}

}  // namespace hzoo

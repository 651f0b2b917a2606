#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace surfcert {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Assumption };

std::string to_string(CheckStatus s);
CheckStatus status_from_string(const std::string& s);

// One named verification record. The anchor ties the check to the section of
// the reference write-up whose claim it certifies; "plumbing" marks checks
// with no external claim behind them.
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string anchor;
    Json witness;
};

struct VerificationReport {
    int schema_version = 1;
    std::string config_name;
    std::vector<CheckRecord> records;

    bool pass() const {
        for (const auto& r : records)
            if (r.status == CheckStatus::Fail) return false;
        return true;
    }
    int count(CheckStatus s) const {
        int n = 0;
        for (const auto& r : records)
            if (r.status == s) ++n;
        return n;
    }
    const CheckRecord* find(const std::string& name) const {
        for (const auto& r : records)
            if (r.name == name) return &r;
        return nullptr;
    }

    Json to_json() const;
    std::string to_text(double runtime_seconds) const;
    static VerificationReport from_json(const Json& j);
};

}  // namespace surfcert

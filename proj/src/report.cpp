#include "surfcert/report.hpp"

#include <sstream>
#include <stdexcept>

namespace surfcert {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Assumption: return "assumption";
    }
    return "fail";
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "assumption") return CheckStatus::Assumption;
    throw std::invalid_argument("unknown check status: " + s);
}

Json VerificationReport::to_json() const {
    Json j;
    j["schema_version"] = schema_version;
    j["config"] = config_name;
    j["verdict"] = pass() ? "pass" : "fail";
    j["summary"] = Json{{"pass", count(CheckStatus::Pass)},
                        {"fail", count(CheckStatus::Fail)},
                        {"assumption", count(CheckStatus::Assumption)}};
    Json checks = Json::array();
    for (const auto& r : records) {
        Json c;
        c["name"] = r.name;
        c["status"] = to_string(r.status);
        c["anchor"] = r.anchor;
        c["witness"] = r.witness;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string VerificationReport::to_text(double runtime_seconds) const {
    std::ostringstream out;
    out << "certification report - " << config_name << "\n";
    out << std::string(60, '-') << "\n";
    for (const auto& r : records) {
        std::string mark = r.status == CheckStatus::Pass ? "PASS"
                          : r.status == CheckStatus::Fail ? "FAIL" : "ASSM";
        out << "[" << mark << "] " << r.name << "  (" << r.anchor << ")\n";
        if (!r.witness.is_null()) {
            std::string w = r.witness.dump();
            if (w.size() > 200) w = w.substr(0, 197) + "...";
            out << "       " << w << "\n";
        }
    }
    out << std::string(60, '-') << "\n";
    out << "pass: " << count(CheckStatus::Pass) << "  fail: " << count(CheckStatus::Fail)
        << "  assumptions: " << count(CheckStatus::Assumption) << "\n";
    if (pass() && count(CheckStatus::Assumption) > 0)
        out << "verdict: PASS (modulo listed assumptions)\n";
    else
        out << "verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
    out << "runtime: " << runtime_seconds << " s\n";
    return out.str();
}

VerificationReport VerificationReport::from_json(const Json& j) {
    VerificationReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.config_name = j.at("config").get<std::string>();
    for (const auto& c : j.at("checks")) {
        CheckRecord rec;
        rec.name = c.at("name").get<std::string>();
        rec.status = status_from_string(c.at("status").get<std::string>());
        rec.anchor = c.at("anchor").get<std::string>();
        rec.witness = c.at("witness");
        r.records.push_back(std::move(rec));
    }
    return r;
}

}  // namespace surfcert

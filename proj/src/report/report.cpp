#include "report/report.hpp"

#include <json.hpp>

namespace kontact {

void ReportDocument::add_info(const std::string& name, const std::string& value) {
    results_.push_back({name, value, "", "info", ""});
}

void ReportDocument::add_entry_report(const VerificationReport& rep, bool with_timing) {
    for (const auto& c : rep.checks) {
        CheckRecord r = c;
        r.name = rep.entry + ": " + r.name;
        results_.push_back(std::move(r));
    }
    if (with_timing) {
        timings_[rep.entry] = rep.wall_seconds;
        include_timings_ = true;
    }
}

bool ReportDocument::has_findings() const {
    for (const auto& r : results_)
        if (r.status == "finding" || r.status == "fail") return true;
    return false;
}

std::string ReportDocument::to_text() const {
    std::string out;
    std::size_t findings = 0;
    for (const auto& r : results_) {
        if (r.status == "info") {
            out += r.name + ": " + r.computed + "\n";
            continue;
        }
        out += "[" + r.status + "] " + r.name + ": " + r.computed + "\n";
        if (r.status != "pass") {
            ++findings;
            out += "    expected: " + r.expected;
            if (!r.paper_locus.empty()) out += "  (" + r.paper_locus + ")";
            out += "\n";
        }
    }
    if (include_timings_) {
        for (const auto& [name, secs] : timings_) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f", secs);
            out += "# " + name + ": " + buf + " s\n";
        }
    }
    std::size_t checked = 0;
    for (const auto& r : results_)
        if (r.status != "info") ++checked;
    if (checked)
        out += std::to_string(checked) + " checks, " + std::to_string(findings) +
               (findings == 1 ? " finding\n" : " findings\n");
    return out;
}

std::string ReportDocument::to_json() const {
    nlohmann::ordered_json doc;
    doc["schema"] = "1";
    doc["command"] = command_;
    auto record = [](const CheckRecord& r) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["computed"] = r.computed;
        j["expected"] = r.expected;
        j["status"] = r.status;
        j["paper_locus"] = r.paper_locus;
        if (!r.data.empty())
            j["data"] = nlohmann::ordered_json::parse(r.data);
        return j;
    };
    doc["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results_) doc["results"].push_back(record(r));
    doc["findings"] = nlohmann::ordered_json::array();
    for (const auto& r : results_)
        if (r.status == "finding" || r.status == "fail") doc["findings"].push_back(record(r));
    if (include_timings_) {
        nlohmann::ordered_json t;
        for (const auto& [name, secs] : timings_) t[name] = secs;
        doc["timings"] = t;
    }
    return doc.dump(2) + "\n";
}

}  // namespace kontact

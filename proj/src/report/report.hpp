#pragma once

#include <map>
#include <string>
#include <vector>

#include "catalog/verify.hpp"

namespace kontact {

/// Output document for one command invocation. Renders to human-readable
/// text and to JSON (schema version "1"); both honor a fixed field order so
/// identical invocations serialize byte-identically.
class ReportDocument {
public:
    explicit ReportDocument(std::string command) : command_(std::move(command)) {}

    void add(CheckRecord r) { results_.push_back(std::move(r)); }
    void add_info(const std::string& name, const std::string& value);
    /// Appends an entry report, prefixing check names with the entry name.
    void add_entry_report(const VerificationReport& rep, bool with_timing);

    const std::vector<CheckRecord>& results() const { return results_; }

    bool has_findings() const;
    /// 0 = all checks pass, 1 = findings present.
    int exit_status() const { return has_findings() ? 1 : 0; }

    std::string to_text() const;
    std::string to_json() const;

private:
    std::string command_;
    std::vector<CheckRecord> results_;
    std::map<std::string, double> timings_;
    bool include_timings_ = false;
};

}  // namespace kontact

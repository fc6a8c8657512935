#pragma once

#include <string>
#include <vector>

#include "chopf/common.hpp"

namespace chopf {

struct CheckResult {
    std::string name;
    bool ok = true;
    bool skipped = false;
    std::string witness;  // empty when the check passed
};

/// Per-axiom pass/fail list with witnesses for every failure.
class ValidationReport {
public:
    void pass(const std::string& name) { checks_.push_back({name, true, false, ""}); }
    void fail(const std::string& name, const std::string& witness) {
        checks_.push_back({name, false, false, witness});
    }
    void add(const std::string& name, bool ok, const std::string& witness = "") {
        checks_.push_back({name, ok, false, ok ? "" : witness});
    }
    void skip(const std::string& name, const std::string& reason) {
        checks_.push_back({name, true, true, reason});
    }
    void merge(const ValidationReport& other, const std::string& prefix = "") {
        for (auto c : other.checks_) {
            c.name = prefix.empty() ? c.name : prefix + "." + c.name;
            checks_.push_back(std::move(c));
        }
    }

    bool ok() const {
        for (const auto& c : checks_)
            if (!c.ok) return false;
        return true;
    }
    const std::vector<CheckResult>& checks() const { return checks_; }

    std::string firstFailure() const {
        for (const auto& c : checks_)
            if (!c.ok) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
        return "";
    }

    std::string summary() const {
        std::string out;
        for (const auto& c : checks_) {
            out += (c.ok ? (c.skipped ? "[skip] " : "[pass] ") : "[FAIL] ");
            out += c.name;
            if (!c.witness.empty()) out += "  " + c.witness;
            out += "\n";
        }
        return out;
    }

    /// Throws when any check failed; used where the spec demands an error.
    void require(const std::string& context) const {
        if (!ok()) throw ChopfError(context + ": " + firstFailure());
    }

private:
    std::vector<CheckResult> checks_;
};

}  // namespace chopf

#include "folalg/report.hpp"

#include <json.hpp>

namespace folalg {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

void Report::pass(const std::string& id, const std::string& label, const std::string& note) {
    add({id, label, Verdict::Pass, {}, note});
}

void Report::fail(const std::string& id, const std::string& label,
                  std::vector<std::string> residuals, const std::string& note) {
    add({id, label, Verdict::Fail, std::move(residuals), note});
}

void Report::not_applicable(const std::string& id, const std::string& label,
                            const std::string& note) {
    add({id, label, Verdict::NotApplicable, {}, note});
}

void Report::indeterminate(const std::string& id, const std::string& label,
                           const std::string& note) {
    add({id, label, Verdict::Indeterminate, {}, note});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (CheckResult c : other.checks_) {
        if (!prefix.empty()) c.id = prefix + "." + c.id;
        checks_.push_back(std::move(c));
    }
}

bool Report::all_passed() const {
    for (const auto& c : checks_)
        if (c.verdict == Verdict::Fail || c.verdict == Verdict::Indeterminate) return false;
    return true;
}

bool Report::any_failed() const {
    for (const auto& c : checks_)
        if (c.verdict == Verdict::Fail) return true;
    return false;
}

bool Report::any_indeterminate() const {
    for (const auto& c : checks_)
        if (c.verdict == Verdict::Indeterminate) return true;
    return false;
}

int Report::exit_code() const {
    if (any_failed()) return 1;
    if (any_indeterminate()) return 3;
    return 0;
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& c : checks_) {
        out += "[" + verdict_name(c.verdict) + "] " + c.id;
        if (!c.label.empty()) out += " (" + c.label + ")";
        if (!c.note.empty()) out += " -- " + c.note;
        out += "\n";
        for (const auto& r : c.residuals) out += "    residual: " + r + "\n";
    }
    std::string overall = any_failed() ? "FAIL" : (any_indeterminate() ? "INDETERMINATE" : "PASS");
    out += "overall: " + overall + "\n";
    return out;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["paper_label"] = c.label;
        e["verdict"] = verdict_name(c.verdict);
        e["residuals"] = c.residuals;
        if (!c.note.empty()) e["note"] = c.note;
        j["checks"].push_back(std::move(e));
    }
    j["overall"] = any_failed() ? "fail" : (any_indeterminate() ? "indeterminate" : "pass");
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

}  // namespace folalg

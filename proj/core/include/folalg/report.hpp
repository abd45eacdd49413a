#pragma once

#include <string>
#include <vector>

namespace folalg {

enum class Verdict { Pass, Fail, NotApplicable, Indeterminate };

std::string verdict_name(Verdict v);

struct CheckResult {
    std::string id;           // stable machine identifier, e.g. "lie.jacobi"
    std::string label;        // condition label, e.g. "Def. 6.3 (iv)"
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> residuals;  // canonical polynomial strings
    std::string note;
};

class Report {
  public:
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void pass(const std::string& id, const std::string& label = "",
              const std::string& note = "");
    void fail(const std::string& id, const std::string& label,
              std::vector<std::string> residuals, const std::string& note = "");
    void not_applicable(const std::string& id, const std::string& label = "",
                        const std::string& note = "");
    void indeterminate(const std::string& id, const std::string& label = "",
                       const std::string& note = "");
    void merge(const Report& other, const std::string& prefix = "");

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_passed() const;
    bool any_failed() const;
    bool any_indeterminate() const;

    // 0 all pass, 1 any fail, 3 indeterminate without failure.
    int exit_code() const;

    std::string to_text() const;
    std::string to_json() const;  // stable field order, newline-terminated

  private:
    std::vector<CheckResult> checks_;
};

}  // namespace folalg

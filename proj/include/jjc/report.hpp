#ifndef JJC_REPORT_HPP
#define JJC_REPORT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jjc {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Ordered list of named pass/fail conditions. Verifiers return one of these
/// instead of a bare boolean so callers can see which precondition failed.
class Report {
public:
    Report& add(std::string name, bool passed, std::string detail = {});
    /// Appends every check of `other`, prefixing names with `prefix.`.
    Report& merge(const Report& other, std::string_view prefix = {});

    bool passed() const;
    const Check* first_failure() const;
    const Check* find(std::string_view name) const;
    const std::vector<Check>& checks() const { return checks_; }

    /// "ok" or "<name>: <detail>" of the first failure.
    std::string summary() const;

private:
    std::vector<Check> checks_;
};

/// A construction was asked to run on data violating one of its conditions.
class ConditionError : public std::runtime_error {
public:
    explicit ConditionError(Report report);
    const Report& report() const { return report_; }

private:
    Report report_;
};

/// Two independent routes disagreed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace jjc

#endif

#include "jjc/report.hpp"

#include <algorithm>

namespace jjc {

Report& Report::add(std::string name, bool passed, std::string detail)
{
    checks_.push_back({std::move(name), passed, std::move(detail)});
    return *this;
}

Report& Report::merge(const Report& other, std::string_view prefix)
{
    for (const auto& c : other.checks_) {
        std::string name = prefix.empty() ? c.name : std::string(prefix) + "." + c.name;
        checks_.push_back({std::move(name), c.passed, c.detail});
    }
    return *this;
}

bool Report::passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::first_failure() const
{
    for (const auto& c : checks_)
        if (!c.passed) return &c;
    return nullptr;
}

const Check* Report::find(std::string_view name) const
{
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::summary() const
{
    const Check* f = first_failure();
    if (!f) return "ok";
    return f->detail.empty() ? f->name : f->name + ": " + f->detail;
}

ConditionError::ConditionError(Report report)
    : std::runtime_error("condition failed: " + report.summary()), report_(std::move(report))
{
}

}  // namespace jjc

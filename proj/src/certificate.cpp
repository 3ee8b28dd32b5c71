#include "mdrg/certificate.hpp"

#include <algorithm>

namespace mdrg {

void Certificate::pass(std::string name, std::string detail)
{
    checks_.push_back(Check{std::move(name), true, std::move(detail), nullptr});
}

void Certificate::fail(std::string name, Json witness, std::string detail)
{
    checks_.push_back(Check{std::move(name), false, std::move(detail), std::move(witness)});
}

void Certificate::add(Check check)
{
    checks_.push_back(std::move(check));
}

void Certificate::merge(const Certificate& other, const std::string& prefix)
{
    for (auto check : other.checks_) {
        if (!prefix.empty())
            check.name = prefix + "." + check.name;
        checks_.push_back(std::move(check));
    }
}

bool Certificate::passed() const noexcept
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Certificate::find(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return &c;
    return nullptr;
}

Json Certificate::witness() const
{
    for (const auto& c : checks_)
        if (!c.passed)
            return c.witness;
    return nullptr;
}

Json Certificate::to_json() const
{
    Json checks = Json::array();
    for (const auto& c : checks_) {
        Json entry = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        if (!c.passed)
            entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    Json out = {{"verdict", passed() ? "pass" : "fail"}, {"checks", std::move(checks)}};
    if (!subject_.empty())
        out["subject"] = subject_;
    out["witness"] = witness();
    return out;
}

} // namespace mdrg

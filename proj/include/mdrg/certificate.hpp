#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace mdrg {

using Json = nlohmann::json;

/// One named sub-check of a certificate. A failing check carries the
/// counterexample that refutes it.
struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
    Json witness;
};

/// Verdict plus the list of sub-checks. The verdict is the conjunction of the
/// checks; the reported witness is the first failing check's witness.
class Certificate {
public:
    Certificate() = default;
    explicit Certificate(std::string subject) : subject_(std::move(subject)) {}

    void pass(std::string name, std::string detail = {});
    void fail(std::string name, Json witness, std::string detail = {});
    void add(Check check);
    /// Appends every check of another certificate, prefixing names.
    void merge(const Certificate& other, const std::string& prefix = {});

    bool passed() const noexcept;
    const std::vector<Check>& checks() const noexcept { return checks_; }
    const Check* find(const std::string& name) const;
    /// Witness of the first failing check, null when the certificate passes.
    Json witness() const;
    const std::string& subject() const noexcept { return subject_; }

    Json to_json() const;

private:
    std::string subject_;
    std::vector<Check> checks_;
};

} // namespace mdrg

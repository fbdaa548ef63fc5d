#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ocd {

// Input or invariant violations. Carries every violation found, not just the first.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
    explicit validation_error(std::string issue)
        : validation_error(std::vector<std::string>{std::move(issue)}) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& i : v) {
            if (!s.empty()) s += "; ";
            s += i;
        }
        return s;
    }
    std::vector<std::string> issues_;
};

// Runtime numerical failure (NaN/Inf cell, wake loss, clipped energy, ...).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ocd

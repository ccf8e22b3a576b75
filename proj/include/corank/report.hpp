#pragma once

#include <string>
#include <utility>
#include <vector>

namespace corank {

/// Outcome of a verification pass. `ok` is false iff at least one violation was recorded.
struct Report {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string message) {
        ok = false;
        violations.push_back(std::move(message));
    }

    void merge(const Report& other, const std::string& prefix = {}) {
        for (const auto& v : other.violations) fail(prefix + v);
    }
};

}  // namespace corank

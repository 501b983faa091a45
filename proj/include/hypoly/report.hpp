#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace hypoly {

/// One verified identity: the identity written as a formula, the worst
/// residual seen across the sampled indices/points, and the gate it was
/// held to.
struct IdentityCheck {
    std::string identity;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note; // optional context (index ranges, skip reason, ...)
};

struct Report {
    std::string suite;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const IdentityCheck& c) { return c.pass; });
    }
    double worst_residual() const {
        double w = 0.0;
        for (const auto& c : checks) w = std::max(w, c.max_residual);
        return w;
    }
    void add(std::string identity, double residual, double tol, std::string note = {}) {
        checks.push_back(IdentityCheck{std::move(identity), residual, tol,
                                       residual <= tol, std::move(note)});
    }
};

} // namespace hypoly

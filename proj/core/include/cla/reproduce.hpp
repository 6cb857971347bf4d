#pragma once

#include <string>
#include <vector>

namespace cla {

/// One golden-value comparison: expected and computed canonical text.
struct ReproCheck {
    std::string id;
    std::string group;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReproReport {
    std::vector<ReproCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Replays the embedded golden computations.  Scopes: construction,
/// families, splitting, lattice, comb, pi1, or all.
ReproReport reproduce(const std::string& scope);

} // namespace cla

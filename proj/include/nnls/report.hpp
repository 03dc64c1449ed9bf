#pragma once

#include <string>
#include <vector>

namespace nnls {

/// Named invariant residuals with pass/fail against tolerances.
/// `anchor` names the mathematical identity an item checks, or "plumbing"
/// for artifact-level bookkeeping items. Items with comparison `report_only`
/// carry measured values that are informational (always pass).
struct DiagnosticsReport {
    enum class Comparison { upper_bound, lower_bound, report_only };

    struct Item {
        std::string name;
        double value = 0.0;
        double tolerance = 0.0;
        bool pass = true;
        std::string anchor = "plumbing";
    };

    std::vector<Item> items;

    void add_upper(std::string name, double value, double tol, std::string anchor) {
        items.push_back({std::move(name), value, tol, value <= tol, std::move(anchor)});
    }
    void add_lower(std::string name, double value, double bound, std::string anchor) {
        items.push_back({std::move(name), value, bound, value >= bound, std::move(anchor)});
    }
    void add_info(std::string name, double value, std::string anchor) {
        items.push_back({std::move(name), value, 0.0, true, std::move(anchor)});
    }

    bool overall() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    /// Human-readable fixed-width table.
    std::string table() const;
};

}  // namespace nnls

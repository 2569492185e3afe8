#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vdc {

/** A named inequality check: `bound` is expected to dominate `measured`.
 *
 *  margin = bound - measured; the check passes when margin >= -1e-9, so an
 *  equality case that lands a rounding error on the wrong side still passes.
 *  `aux` carries any extra named numbers (secondary bounds, raw moduli, ...)
 *  so reports stay self-contained when serialized.
 */
struct BoundReport {
    std::string name;
    double bound = 0.0;
    std::optional<double> measured;
    std::optional<double> margin;
    bool passed = true;
    std::string notes;
    std::vector<std::pair<std::string, double>> aux;

    static constexpr double slack = 1e-9;
};

/// Build a report for `measured <= bound`, applying the standard slack.
inline BoundReport make_bound_report(std::string name, double bound, double measured,
                                     std::string notes = {}) {
    BoundReport r;
    r.name = std::move(name);
    r.bound = bound;
    r.measured = measured;
    r.margin = bound - measured;
    r.passed = *r.margin >= -BoundReport::slack;
    r.notes = std::move(notes);
    return r;
}

}  // namespace vdc

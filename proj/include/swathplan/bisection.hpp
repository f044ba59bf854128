#pragma once

#include <concepts>

namespace swathplan {

/// Bisects [lo, hi] for the boundary of a predicate that holds on a prefix of
/// the interval: pred(lo) must be true and pred(hi) false. Runs until the
/// bracket cannot be split in double precision and returns the last point
/// known to satisfy the predicate. `tolerance` > 0 stops earlier, once
/// hi - lo <= tolerance.
template <std::predicate<double> Pred>
double bisect_last_true(double lo, double hi, Pred&& pred, double tolerance = 0.0) {
    // A double bracket collapses in well under 2100 halvings.
    for (int iter = 0; iter < 2100; ++iter) {
        if (hi - lo <= tolerance) {
            break;
        }
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (pred(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace swathplan

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace woi {

// Axis-aligned acceptability region in objective space, minimization sense.
// A performance vector y is acceptable iff y_k <= limits_k for every k.
// The window is unbounded below, so it is downward-closed: lowering any
// coordinate of an acceptable vector keeps it acceptable.
class WindowOfInterest {
public:
    explicit WindowOfInterest(std::vector<double> limits);

    std::size_t dimension() const { return limits_.size(); }
    const std::vector<double>& limits() const { return limits_; }

    // Membership test, boundary inclusive.
    bool contains(std::span<const double> y) const;

    // Euclidean distance from y to the window: sqrt(sum_k max(0, y_k - limits_k)^2).
    // Zero exactly when contains(y).
    double distance(std::span<const double> y) const;

private:
    std::vector<double> limits_;
};

} // namespace woi

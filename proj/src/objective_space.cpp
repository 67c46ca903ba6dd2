#include "woi/objective_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace woi {

WindowOfInterest::WindowOfInterest(std::vector<double> limits)
    : limits_(std::move(limits))
{
    if (limits_.empty())
        throw std::invalid_argument("woi: limits must not be empty");
    for (double v : limits_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("woi: limits must be finite");
    }
}

bool WindowOfInterest::contains(std::span<const double> y) const
{
    if (y.size() != limits_.size())
        throw std::invalid_argument("woi: performance vector has dimension "
                                    + std::to_string(y.size()) + ", expected "
                                    + std::to_string(limits_.size()));
    for (std::size_t k = 0; k < limits_.size(); ++k) {
        if (y[k] > limits_[k])
            return false;
    }
    return true;
}

double WindowOfInterest::distance(std::span<const double> y) const
{
    if (y.size() != limits_.size())
        throw std::invalid_argument("woi: performance vector has dimension "
                                    + std::to_string(y.size()) + ", expected "
                                    + std::to_string(limits_.size()));
    double sq = 0.0;
    for (std::size_t k = 0; k < limits_.size(); ++k) {
        const double excess = y[k] - limits_[k];
        if (excess > 0.0)
            sq += excess * excess;
    }
    return std::sqrt(sq);
}

} // namespace woi

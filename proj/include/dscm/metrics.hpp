#pragma once

#include "dscm/tensor.hpp"

#include <span>
#include <stdexcept>

namespace dscm {

class MetricError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 100 * mean(|pred - target| / |target|); throws on a zero target.
real mape(std::span<const real> pred, std::span<const real> target);
/// mean |pred - target|.
real mae(std::span<const real> pred, std::span<const real> target);

/// Neumaier-compensated running sum; result does not depend on chunking.
class CompensatedSum {
public:
    void add(real v);
    real value() const { return sum_ + carry_; }

private:
    real sum_ = 0;
    real carry_ = 0;
};

}  // namespace dscm

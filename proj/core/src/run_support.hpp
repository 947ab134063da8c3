#pragma once

#include <cmath>
#include <deque>

#include "gdpm/solver.hpp"

namespace gdpm::detail {

/// Trailing-window divergence detector on gradient norms.
class GrowthWindow {
 public:
  GrowthWindow(double factor, int window) : factor_(factor), window_(window) {}

  /// Push the norm at the current iteration; true once the norm has grown by
  /// at least `factor` over the last `window` iterations.
  bool push(double gnorm) {
    hist_.push_back(gnorm);
    if (static_cast<int>(hist_.size()) > window_ + 1) hist_.pop_front();
    return window_ > 0 && static_cast<int>(hist_.size()) == window_ + 1 &&
           hist_.front() > 0.0 && hist_.back() >= factor_ * hist_.front();
  }

 private:
  double factor_;
  int window_;
  std::deque<double> hist_;
};

inline bool all_finite(const Vector& v) { return v.allFinite(); }

}  // namespace gdpm::detail

#pragma once

namespace hypvol {

// Compensated accumulator.  Evaluation sums are required to be independent of
// evaluation order up to this compensation, so every chain evaluation funnels
// through it in a fixed index order.
class Kahan {
public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double sum() const { return s_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

} // namespace hypvol

#pragma once

namespace euler_padic::detail {

// Kahan compensated accumulator. Addition order is fixed by callers so
// results reproduce bit-for-bit across runs and platforms with IEEE doubles.
class Kahan {
 public:
  void add(double x) {
    double y = x - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace euler_padic::detail

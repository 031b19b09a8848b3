#pragma once

namespace upsilon {

// Compensated (Kahan) accumulator. The summation order is fixed by the
// caller, so results are reproducible run-to-run.
class KahanSum {
 public:
  void add(double v) {
    double y = v - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  KahanSum& operator+=(double v) {
    add(v);
    return *this;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace upsilon

#pragma once

#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

// Exact element a + b*sqrt(d) of a real quadratic field, fixed square-free d.
class QuadraticNumber {
 public:
  QuadraticNumber() : d_(5) {}
  QuadraticNumber(Rat a, Rat b, long long d) : a_(a), b_(b), d_(d) {}

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long long d() const { return d_; }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    x.check(y);
    return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    x.check(y);
    return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    x.check(y);
    return {x.a_ * y.a_ + Rat(x.d_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
  }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

  // sign of a + b sqrt(d), exact
  int sign() const {
    const int sa = a_ < Rat(0) ? -1 : (a_.is_zero() ? 0 : 1);
    const int sb = b_ < Rat(0) ? -1 : (b_.is_zero() ? 0 : 1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // compare a^2 with d b^2; the larger magnitude wins
    const Rat lhs = a_ * a_;
    const Rat rhs = Rat(d_) * b_ * b_;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() < 0;
  }

  double to_double() const;
  std::string str() const;  // "720+320r5"

 private:
  void check(const QuadraticNumber& o) const {
    if (d_ != o.d_) throw std::domain_error("mixed quadratic fields");
  }
  Rat a_;
  Rat b_;
  long long d_;
};

// Does some nonempty proper subset sum to half the total? Exact arithmetic,
// meet-in-the-middle; rejects lists longer than 30.
bool qdim_partition_exists(const std::vector<QuadraticNumber>& values);

// Numeric variant for values only known to floating precision.
bool qdim_partition_exists_numeric(const std::vector<double>& values, double tol);

}  // namespace voa

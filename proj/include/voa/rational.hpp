#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace voa {

// Exact rational scalar on a 128-bit backbone. All lattice arithmetic in this
// project stays far below the overflow guard; breaching it throws instead of
// wrapping.
class Rat {
 public:
  using Int = __int128;

  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }
  static Rat from_int128(Int n, Int d) {
    Rat r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  long long as_int() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
    return checked_ll(num_);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from_int128(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from_int128(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_int128(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return from_int128(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const { return from_int128(-num_, den_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // lowest terms, "p" or "p/q"
  std::string str() const {
    std::string s = int128_str(num_);
    if (den_ != 1) s += "/" + int128_str(den_);
    return s;
  }

  static std::string int128_str(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    }
    return neg ? "-" + s : s;
  }

  // "-3", "5/2"
  static Rat parse(const std::string& s);

 private:
  static long long checked_ll(Int v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: out of int64 range");
    return static_cast<long long>(v);
  }
  static Int gcd128(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    static const Int kGuard = Int(1) << 100;
    if (num_ > kGuard || num_ < -kGuard || den_ > kGuard)
      throw std::overflow_error("Rat: magnitude guard exceeded");
  }

  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace voa

namespace Eigen {
template <>
struct NumTraits<voa::Rat> : GenericNumTraits<voa::Rat> {
  using Real = voa::Rat;
  using NonInteger = voa::Rat;
  using Nested = voa::Rat;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12,
  };
  static inline Real epsilon() { return voa::Rat(0); }
  static inline Real dummy_precision() { return voa::Rat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace voa {

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline Rat dot(const RatVec& a, const RatMat& g, const RatVec& b) {
  Rat s;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    Rat row;
    for (Eigen::Index j = 0; j < g.cols(); ++j) row += g(i, j) * b(j);
    s += a(i) * row;
  }
  return s;
}

}  // namespace voa

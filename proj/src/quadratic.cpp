#include "voa/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace voa {

double QuadraticNumber::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticNumber::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str();
  if (!(b_ < Rat(0)) && !s.empty()) s += "+";
  s += b_.str() + "r" + std::to_string(d_);
  return s;
}

bool qdim_partition_exists(const std::vector<QuadraticNumber>& values) {
  const size_t n = values.size();
  if (n > 30) throw std::length_error("partition check limited to 30 values");
  if (n == 0) return false;
  const long long d = values[0].d();
  QuadraticNumber total(Rat(0), Rat(0), d);
  for (const auto& v : values) {
    if (v.sign() <= 0) throw std::domain_error("partition check expects positive values");
    total = total + v;
  }
  // target: subset summing to total/2 (nonempty, proper)
  // meet in the middle on exact (a, b) pairs
  const size_t half = n / 2;
  auto subset_sums = [&](size_t lo, size_t hi) {
    std::map<std::pair<std::string, std::string>, QuadraticNumber> sums;
    const size_t k = hi - lo;
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      QuadraticNumber s(Rat(0), Rat(0), d);
      for (size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s = s + values[lo + i];
      sums.emplace(std::make_pair(s.a().str(), s.b().str()), s);
    }
    return sums;
  };
  auto left = subset_sums(0, half);
  auto right = subset_sums(half, n);
  // want L + R = total/2, i.e. 2(L + R) = total
  for (const auto& [lk, lv] : left) {
    QuadraticNumber need = total - (lv + lv);  // 2R' with R' = total/2 - L
    // need = 2R for some right subset R
    Rat ra = need.a() / Rat(2), rb = need.b() / Rat(2);
    auto it = right.find(std::make_pair(ra.str(), rb.str()));
    if (it == right.end()) continue;
    QuadraticNumber s = lv + it->second;
    // exclude empty and full subsets
    QuadraticNumber zero(Rat(0), Rat(0), d);
    if (s != zero && s != total) return true;
  }
  return false;
}

bool qdim_partition_exists_numeric(const std::vector<double>& values, double tol) {
  const size_t n = values.size();
  if (n > 30) throw std::length_error("partition check limited to 30 values");
  double total = 0;
  for (double v : values) total += v;
  const double target = total / 2;
  for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
    double s = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s += values[i];
    if (std::abs(s - target) <= tol) return true;
  }
  return false;
}

}  // namespace voa

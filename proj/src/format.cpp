#include "voa/format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace voa {

std::string format_sig(double x, int sig_digits) {
  if (x == 0) return "0." + std::string(sig_digits - 1, '0');
  if (!std::isfinite(x)) return "nan";
  // decimal digits via round-half-even at the target precision
  const bool neg = x < 0;
  double ax = std::abs(x);
  int exp10 = static_cast<int>(std::floor(std::log10(ax)));
  // digits string from a snprintf at high precision, then half-even rounding
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", 30, ax);
  std::string s(buf);
  auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  exp10 = std::stoi(s.substr(epos + 1));
  std::string digits;
  for (char c : mant)
    if (c >= '0' && c <= '9') digits += c;
  // round digits to sig_digits, half to even
  if (static_cast<int>(digits.size()) > sig_digits) {
    bool round_up;
    char next = digits[sig_digits];
    std::string rest = digits.substr(sig_digits + 1);
    bool rest_nonzero = rest.find_first_not_of('0') != std::string::npos;
    if (next > '5' || (next == '5' && rest_nonzero))
      round_up = true;
    else if (next < '5')
      round_up = false;
    else
      round_up = ((digits[sig_digits - 1] - '0') % 2) == 1;
    digits = digits.substr(0, sig_digits);
    if (round_up) {
      int i = sig_digits - 1;
      while (i >= 0 && digits[i] == '9') digits[i--] = '0';
      if (i < 0) {
        digits.insert(digits.begin(), '1');
        digits.pop_back();
        ++exp10;
      } else {
        digits[i]++;
      }
    }
  } else {
    digits += std::string(sig_digits - digits.size(), '0');
  }
  // lay out as plain decimal
  std::string out;
  if (exp10 >= sig_digits - 1 || exp10 < -6) {
    out = digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(exp10);
  } else if (exp10 >= 0) {
    out = digits.substr(0, exp10 + 1) + "." + digits.substr(exp10 + 1);
    if (out.back() == '.') out.pop_back();
  } else {
    out = "0." + std::string(-exp10 - 1, '0') + digits;
  }
  return neg ? "-" + out : out;
}

std::string cell_str(const TableRow::Cell& c) {
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  if (std::holds_alternative<Rat>(c)) return std::get<Rat>(c).str();
  return format_sig(std::get<double>(c));
}

std::string TableRow::tsv() const {
  std::string s;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) s += "\t";
    s += cell_str(cells[i]);
  }
  return s;
}

std::string Table::tsv() const {
  std::string s;
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) s += "\t";
    s += header[i];
  }
  s += "\n";
  for (const auto& r : rows) s += r.tsv() + "\n";
  return s;
}

std::string Table::json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj;
    for (size_t i = 0; i < header.size() && i < r.cells.size(); ++i)
      obj[header[i]] = cell_str(r.cells[i]);
    j.push_back(obj);
  }
  return j.dump(2) + "\n";
}

}  // namespace voa

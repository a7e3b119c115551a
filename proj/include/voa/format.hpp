#pragma once

#include <string>
#include <variant>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

// fixed-precision decimal: 12 significant digits, round half to even,
// trailing zeros kept
std::string format_sig(double x, int sig_digits = 12);

// table cells carry labels, exact rationals, or fixed-precision decimals
struct TableRow {
  using Cell = std::variant<std::string, Rat, double>;
  std::vector<Cell> cells;
  std::string tsv() const;
};

std::string cell_str(const TableRow::Cell& c);

struct Table {
  std::vector<std::string> header;
  std::vector<TableRow> rows;
  std::string tsv() const;
  std::string json() const;
};

}  // namespace voa

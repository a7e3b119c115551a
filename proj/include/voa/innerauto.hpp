#pragma once

#include "voa/repdata.hpp"

namespace voa {

// Rational Cartan vector per component, Dynkin labels in the fundamental
// weight basis.
struct TwistVector {
  std::vector<Weight> parts;
};

TwistVector parse_twist(const std::string& s, const AlgebraSpec& spec);
std::string twist_str(const TwistVector& u);

// <u|u> = sum_i k_i (u_i|u_i)
Rat twist_norm(const AlgebraSpec& spec, const TwistVector& u);

// smallest n with (u|alpha) and (u|lambda) in (1/n)Z over all simple roots
// and the given highest weights
long long sigma_order(const AlgebraSpec& spec, const TwistVector& u,
                      const std::vector<ModuleLabel>& modules);

struct FixedSubalgebra {
  struct Part {
    Family family;
    int rank;
    int level;
  };
  std::vector<Part> simple_parts;  // sorted (family, rank desc, level desc)
  int u1_count = 0;                // abelian rank deficit
  long long dim = 0;               // fixed roots + full Cartan
  std::string type_string() const;
};

// Roots alpha with (u|alpha) integral, classified per component; sub-levels
// are 2k/(theta_sub|theta_sub) in the ambient normalization.
FixedSubalgebra fixed_subalgebra(const AlgebraSpec& spec, const TwistVector& u);

// componentwise mu_i + k_i u_i
std::vector<Weight> twisted_weight_shift(const AlgebraSpec& spec, const std::vector<Weight>& mu,
                                         const TwistVector& u);

// lowest weight w0(lambda) per component
std::vector<Weight> lowest_weight(const AlgebraSpec& spec, const ModuleLabel& m);

// Conformal weight of the twisted module obtained by the Delta-operator:
// h(m) + sum_i min{(u_i|mu) : mu in Pi(lambda_i)} + <u|u>/2.
// Requires (u|alpha) >= -1 for every root alpha.
Rat twisted_conformal_weight(const AlgebraSpec& spec, const ModuleLabel& m, const TwistVector& u);

struct TwistReport {
  ModuleLabel module;
  Rat conformal_weight;
  Rat pairing;      // (u|Lambda)
  Rat twisted_cw;
};

TwistReport twist_report(const AlgebraSpec& spec, const ModuleLabel& m, const TwistVector& u);

// all labels with integral conformal weight >= 2, ordered
std::vector<ModuleLabel> integral_cw2_census(const AlgebraSpec& spec);

}  // namespace voa

#pragma once

#include <map>
#include <string>
#include <vector>

#include "voa/rootsys.hpp"

namespace voa {

// Semisimple algebra as an ordered list of (simple root system, level).
struct AlgebraSpec {
  struct Component {
    RootSystemPtr rs;
    int level;
  };
  std::vector<Component> components;

  int num_components() const { return static_cast<int>(components.size()); }
  int total_rank() const;
  long long dim() const;  // dim of the Lie algebra
  std::string name() const;
  bool operator==(const AlgebraSpec& o) const;
};

// "A4_5", "D7_3+A3_1+G2_1"
AlgebraSpec parse_algebra_spec(const std::string& s);

// Dominant integral weight per component.
struct ModuleLabel {
  std::vector<IntLabels> parts;
  bool operator==(const ModuleLabel& o) const { return parts == o.parts; }
  bool operator<(const ModuleLabel& o) const { return parts < o.parts; }
  bool is_vacuum() const;
};

std::string label_str(const ModuleLabel& m);
ModuleLabel parse_label(const std::string& s, const AlgebraSpec& spec);

bool is_admissible(const AlgebraSpec& spec, const ModuleLabel& m);

// per-component level-k dominant weights, lex ascending
std::vector<IntLabels> level_weights_component(const RootSystem& rs, int level);

// complete ordered label list; component 0 most significant
std::vector<ModuleLabel> level_weights(const AlgebraSpec& spec);

Rat conformal_weight_component(const RootSystem& rs, int level, const IntLabels& lambda);
Rat conformal_weight(const AlgebraSpec& spec, const ModuleLabel& m);

Rat weyl_dim_component(const RootSystem& rs, const IntLabels& lambda);
Rat weyl_dim(const AlgebraSpec& spec, const ModuleLabel& m);

// Weight system of one irreducible component, stored on dominant orbit
// representatives (Freudenthal multiplicities are Weyl invariant).
struct WeightSystem {
  RootSystemPtr rs;
  std::map<IntLabels, long long> dominant_mult;

  long long total_dim() const;
  // min of (u|mu) over the full weight set
  Rat min_pairing(const Weight& u) const;
  // expand to the full weight list; refuses above `cap` weights
  std::vector<std::pair<IntLabels, long long>> expand(size_t cap = 2000000) const;
};

// Freudenthal recursion, exact; cached per (system, lambda).
WeightSystem weight_system_component(const RootSystemPtr& rs, const IntLabels& lambda);

// sum of the S^j moment mu(z)^j over the full weight system (j = 2)
Rat second_moment(const WeightSystem& ws, const Weight& z);

// Energy-graded weight multiplicities of L(k,lambda) up to `depth` (<= 4).
// Keys are affine-dominant finite weights; query via slice routines below.
struct AffineWeights {
  RootSystemPtr rs;
  int level;
  IntLabels lambda;
  int depth;
  std::map<std::pair<IntLabels, int>, long long> mult;

  long long lookup(IntLabels nu, int d) const;  // affine Weyl invariance applied
};

AffineWeights affine_weight_system(const RootSystemPtr& rs, int level, const IntLabels& lambda,
                                   int depth);

// dimensions of the graded pieces at depths 0..depth
std::vector<long long> graded_dims_component(const RootSystemPtr& rs, int level,
                                             const IntLabels& lambda, int depth);
std::vector<long long> graded_dims(const AlgebraSpec& spec, const ModuleLabel& m, int depth);

// full (weight, mult) list of one depth slice of an affine module
std::vector<std::pair<IntLabels, long long>> depth_slice(const AffineWeights& aw, int d);

constexpr int kMaxGradedDepth = 4;

}  // namespace voa

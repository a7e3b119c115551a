#pragma once

#include "voa/modular.hpp"

namespace voa {

// Cyclic simple-current extension of a (tensor-product) simple affine VOA.
struct ExtensionSpec {
  CompoundModular base;
  ModuleLabel generator;
  int order = 0;  // |D|
  std::vector<ModuleLabel> group;  // fusion powers of the generator, vacuum first
};

// Validates that the generator is a simple current whose powers all have
// integral conformal weight (otherwise no VOA extension exists).
ExtensionSpec build_extension(const AlgebraSpec& base, const ModuleLabel& generator);

struct ExtensionModule {
  std::vector<ModuleLabel> orbit;  // D-orbit under fusion, branching of each lift
  int stabilizer_order = 1;        // |D_W|
  int character_index = 0;         // 0 .. |D_W|-1, fixed but non-canonical
  Rat conformal_weight;            // minimum over the orbit
  bool untwisted = false;          // orbit conformal weights congruent mod 1
  double qdim_ext = 0;             // (sum of base qdims over orbit) / |D|
};

// Complete census: every orbit with stabilizer D_W contributes |D_W| modules.
// Untwisted modules are the extension VOA's genuine module list.
std::vector<ExtensionModule> classify_extension_modules(const ExtensionSpec& ext,
                                                        bool untwisted_only);

// orbit members, each with multiplicity one (cyclic D)
std::vector<std::pair<ModuleLabel, int>> extension_branching(const ExtensionModule& x);

}  // namespace voa

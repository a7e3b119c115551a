#include "voa/scext.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace voa {

ExtensionSpec build_extension(const AlgebraSpec& base, const ModuleLabel& generator) {
  ExtensionSpec ext;
  ext.base = get_compound_modular(base);
  ext.generator = generator;
  if (std::abs(ext.base.qdim(generator) - 1.0) > kQdimTol)
    throw std::invalid_argument("generator " + label_str(generator) + " is not a simple current");
  ModuleLabel vac;
  for (const auto& c : base.components) vac.parts.push_back(IntLabels(c.rs->rank(), 0));
  ModuleLabel cur = vac;
  const int cap = ext.base.num() + 1;
  for (int i = 0; i < cap; ++i) {
    if (!ext.base.h(cur).is_integer())
      throw std::invalid_argument("not a VOA extension: " + label_str(cur) +
                                  " has non-integral conformal weight " + ext.base.h(cur).str());
    ext.group.push_back(cur);
    cur = ext.base.fuse_current(generator, cur);
    if (cur == vac) break;
  }
  if (cur != vac) throw std::logic_error("generator fusion powers do not close");
  ext.order = static_cast<int>(ext.group.size());
  return ext;
}

std::vector<ExtensionModule> classify_extension_modules(const ExtensionSpec& ext,
                                                        bool untwisted_only) {
  const auto& cm = ext.base;
  std::map<ModuleLabel, char> seen;
  std::vector<ExtensionModule> out;
  for (const auto& start : cm.labels) {
    if (seen.count(start)) continue;
    std::vector<ModuleLabel> orbit{start};
    seen[start] = 1;
    ModuleLabel cur = cm.fuse_current(ext.generator, start);
    while (!(cur == start)) {
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = cm.fuse_current(ext.generator, cur);
    }
    const int stab = ext.order / static_cast<int>(orbit.size());
    Rat h0 = cm.h(orbit[0]);
    Rat hmin = h0;
    bool untw = true;
    for (const auto& l : orbit) {
      Rat h = cm.h(l);
      if (!(h - h0).is_integer()) untw = false;
      if (h < hmin) hmin = h;
    }
    if (untwisted_only && !untw) continue;
    double q = 0;
    for (const auto& l : orbit) q += cm.qdim(l);
    q /= ext.order;
    for (int chi = 0; chi < stab; ++chi) {
      ExtensionModule em;
      em.orbit = orbit;
      em.stabilizer_order = stab;
      em.character_index = chi;
      em.conformal_weight = hmin;
      em.untwisted = untw;
      em.qdim_ext = q;
      out.push_back(std::move(em));
    }
  }
  std::sort(out.begin(), out.end(), [](const ExtensionModule& a, const ExtensionModule& b) {
    if (!(a.conformal_weight == b.conformal_weight)) return a.conformal_weight < b.conformal_weight;
    if (!(a.orbit[0] == b.orbit[0])) return a.orbit[0] < b.orbit[0];
    return a.character_index < b.character_index;
  });
  return out;
}

std::vector<std::pair<ModuleLabel, int>> extension_branching(const ExtensionModule& x) {
  if (!x.untwisted)
    throw std::invalid_argument("branching is defined for untwisted extension modules");
  std::vector<std::pair<ModuleLabel, int>> out;
  for (const auto& l : x.orbit) out.emplace_back(l, 1);
  return out;
}

}  // namespace voa

#include "voa/repdata.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace voa {

int AlgebraSpec::total_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rs->rank();
  return r;
}

long long AlgebraSpec::dim() const {
  long long d = 0;
  for (const auto& c : components)
    d += 2 * positive_root_count(c.rs->family(), c.rs->rank()) + c.rs->rank();
  return d;
}

std::string AlgebraSpec::name() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += components[i].rs->name() + "_" + std::to_string(components[i].level);
  }
  return s;
}

bool AlgebraSpec::operator==(const AlgebraSpec& o) const { return name() == o.name(); }

AlgebraSpec parse_algebra_spec(const std::string& s) {
  AlgebraSpec spec;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    auto us = tok.find('_');
    if (us == std::string::npos || us < 2)
      throw std::invalid_argument("bad algebra spec component '" + tok + "' (want e.g. A4_5)");
    auto rs = get_root_system(tok.substr(0, us));
    int level = std::stoi(tok.substr(us + 1));
    if (level < 1) throw std::invalid_argument("level must be positive in '" + tok + "'");
    spec.components.push_back({rs, level});
  }
  if (spec.components.empty()) throw std::invalid_argument("empty algebra spec");
  return spec;
}

bool ModuleLabel::is_vacuum() const {
  for (const auto& p : parts)
    for (int x : p)
      if (x) return false;
  return true;
}

std::string label_str(const ModuleLabel& m) {
  std::string s;
  for (size_t c = 0; c < m.parts.size(); ++c) {
    if (c) s += "x";
    s += "[";
    for (size_t i = 0; i < m.parts[c].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(m.parts[c][i]);
    }
    s += "]";
  }
  return s;
}

ModuleLabel parse_label(const std::string& s, const AlgebraSpec& spec) {
  ModuleLabel m;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == 'x') {
      ++i;
      continue;
    }
    if (s[i] != '[') throw std::invalid_argument("bad label '" + s + "'");
    auto j = s.find(']', i);
    if (j == std::string::npos) throw std::invalid_argument("bad label '" + s + "'");
    std::string body = s.substr(i + 1, j - i - 1);
    IntLabels part;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) part.push_back(std::stoi(tok));
    m.parts.push_back(std::move(part));
    i = j + 1;
  }
  if (m.parts.size() != spec.components.size())
    throw std::invalid_argument("label has " + std::to_string(m.parts.size()) +
                                " components, spec needs " +
                                std::to_string(spec.components.size()));
  for (size_t c = 0; c < m.parts.size(); ++c)
    if (static_cast<int>(m.parts[c].size()) != spec.components[c].rs->rank())
      throw std::invalid_argument("label rank mismatch in component " + std::to_string(c));
  if (!is_admissible(spec, m)) throw std::invalid_argument("label " + s + " not admissible");
  return m;
}

bool is_admissible(const AlgebraSpec& spec, const ModuleLabel& m) {
  if (m.parts.size() != spec.components.size()) return false;
  for (size_t c = 0; c < m.parts.size(); ++c) {
    const auto& rs = *spec.components[c].rs;
    long long lvl = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      if (m.parts[c][i] < 0) return false;
      lvl += static_cast<long long>(m.parts[c][i]) * rs.comarks()[i];
    }
    if (lvl > spec.components[c].level) return false;
  }
  return true;
}

std::vector<IntLabels> level_weights_component(const RootSystem& rs, int level) {
  std::vector<IntLabels> out;
  IntLabels cur(rs.rank(), 0);
  const auto& cm = rs.comarks();
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == rs.rank()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; used + a * cm[i] <= level; ++a) {
      cur[i] = a;
      self(self, i + 1, used + a * cm[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModuleLabel> level_weights(const AlgebraSpec& spec) {
  std::vector<std::vector<IntLabels>> per;
  for (const auto& c : spec.components)
    per.push_back(level_weights_component(*c.rs, c.level));
  std::vector<ModuleLabel> out;
  ModuleLabel cur;
  cur.parts.resize(per.size());
  auto rec = [&](auto&& self, size_t c) -> void {
    if (c == per.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& l : per[c]) {
      cur.parts[c] = l;
      self(self, c + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rat conformal_weight_component(const RootSystem& rs, int level, const IntLabels& lambda) {
  Rat ll = rs.inner(lambda, lambda);
  IntLabels rho(rs.rank(), 1);
  Rat lr = rs.inner(lambda, rho);
  return (ll + Rat(2) * lr) / Rat(2LL * (level + rs.dual_coxeter()));
}

Rat conformal_weight(const AlgebraSpec& spec, const ModuleLabel& m) {
  Rat s;
  for (size_t c = 0; c < m.parts.size(); ++c)
    s += conformal_weight_component(*spec.components[c].rs, spec.components[c].level, m.parts[c]);
  return s;
}

Rat weyl_dim_component(const RootSystem& rs, const IntLabels& lambda) {
  IntLabels lr(lambda);
  for (auto& x : lr) x += 1;
  IntLabels rho(rs.rank(), 1);
  Rat d(1);
  for (const auto& a : rs.positive_roots()) d *= rs.inner(lr, a) / rs.inner(rho, a);
  return d;
}

Rat weyl_dim(const AlgebraSpec& spec, const ModuleLabel& m) {
  Rat d(1);
  for (size_t c = 0; c < m.parts.size(); ++c) d *= weyl_dim_component(*spec.components[c].rs, m.parts[c]);
  return d;
}

namespace {

// dominant mu with (mu+rho | mu+rho) <= bound and mu in lambda + Q;
// exploits monotonicity of the norm in each label.
std::vector<IntLabels> dominant_candidates(const RootSystem& rs, const IntLabels& lambda,
                                           const Rat& bound, bool require_below) {
  const int n = rs.rank();
  std::vector<IntLabels> out;
  IntLabels cur(n, 0);
  IntLabels rho(n, 1);
  auto norm = [&](const IntLabels& v) {
    IntLabels vr(v);
    for (int i = 0; i < n; ++i) vr[i] += 1;
    return rs.inner(vr, vr);
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (norm(cur) > bound) return;  // monotone in each coordinate
    if (i == n) {
      IntLabels diff(n);
      for (int j = 0; j < n; ++j) diff[j] = lambda[j] - cur[j];
      RatVec co = rs.root_coords(diff);
      for (int j = 0; j < n; ++j)
        if (!co(j).is_integer()) return;
      if (require_below)
        for (int j = 0; j < n; ++j)
          if (co(j) < Rat(0)) return;
      out.push_back(cur);
      return;
    }
    for (int a = 0;; ++a) {
      cur[i] = a;
      if (norm(cur) > bound && a > 0) break;
      if (norm(cur) <= bound)
        self(self, i + 1);
      else if (a == 0)
        break;
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  return out;
}

std::mutex g_ws_mutex;
std::map<std::pair<std::string, IntLabels>, WeightSystem> g_ws_cache;

}  // namespace

WeightSystem weight_system_component(const RootSystemPtr& rs, const IntLabels& lambda) {
  {
    std::lock_guard<std::mutex> lock(g_ws_mutex);
    auto it = g_ws_cache.find({rs->name(), lambda});
    if (it != g_ws_cache.end()) return it->second;
  }
  const int n = rs->rank();
  IntLabels rho(n, 1);
  IntLabels lr(lambda);
  for (auto& x : lr) x += 1;
  Rat top = rs->inner(lr, lr);
  auto cands = dominant_candidates(*rs, lambda, top, /*require_below=*/true);
  std::sort(cands.begin(), cands.end(), [&](const IntLabels& a, const IntLabels& b) {
    return rs->inner(a, rho) > rs->inner(b, rho);
  });
  WeightSystem ws;
  ws.rs = rs;
  ws.dominant_mult[lambda] = 1;
  const auto& pos = rs->positive_roots();
  for (const auto& mu : cands) {
    if (mu == lambda) continue;
    IntLabels mr(mu);
    for (auto& x : mr) x += 1;
    Rat den = top - rs->inner(mr, mr);
    if (den.is_zero()) continue;  // saturating candidates are not weights
    Rat s;
    for (const auto& a : pos) {
      for (int j = 1;; ++j) {
        IntLabels nu(n);
        for (int i = 0; i < n; ++i) nu[i] = mu[i] + j * a[i];
        auto it = ws.dominant_mult.find(rs->dominate(nu));
        if (it == ws.dominant_mult.end()) break;
        s += Rat(it->second) * rs->inner(nu, a);
      }
    }
    Rat m = Rat(2) * s / den;
    long long mi = m.as_int();
    if (mi > 0) ws.dominant_mult[mu] = mi;
  }
  std::lock_guard<std::mutex> lock(g_ws_mutex);
  g_ws_cache.emplace(std::make_pair(rs->name(), lambda), ws);
  return ws;
}

long long WeightSystem::total_dim() const {
  long long d = 0;
  for (const auto& [mu, m] : dominant_mult) d += m * static_cast<long long>(rs->orbit_size(mu));
  return d;
}

Rat WeightSystem::min_pairing(const Weight& u) const {
  Weight up = rs->dominate(u);
  bool first = true;
  Rat best;
  for (const auto& [mu, m] : dominant_mult) {
    Rat v = -rs->inner(up, rs->star(mu));
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

std::vector<std::pair<IntLabels, long long>> WeightSystem::expand(size_t cap) const {
  std::vector<std::pair<IntLabels, long long>> out;
  for (const auto& [mu, m] : dominant_mult) {
    std::set<IntLabels> orbit{mu};
    std::vector<IntLabels> frontier{mu};
    while (!frontier.empty()) {
      std::vector<IntLabels> next;
      for (const auto& v : frontier)
        for (int i = 0; i < rs->rank(); ++i) {
          IntLabels w = rs->reflect(i, v);
          if (orbit.insert(w).second) next.push_back(w);
        }
      frontier = std::move(next);
      if (orbit.size() > cap) throw std::length_error("weight system expansion exceeds cap");
    }
    for (const auto& w : orbit) out.emplace_back(w, m);
    if (out.size() > cap) throw std::length_error("weight system expansion exceeds cap");
  }
  return out;
}

Rat second_moment(const WeightSystem& ws, const Weight& z) {
  Rat s;
  for (const auto& [w, m] : ws.expand()) {
    Rat p = ws.rs->inner(z, w);
    s += Rat(m) * p * p;
  }
  return s;
}

long long AffineWeights::lookup(IntLabels nu, int d) const {
  const auto& r = *rs;
  for (;;) {
    if (d < 0) return 0;
    nu = r.dominate(nu);
    Rat c = Rat(level) - r.inner(nu, r.theta());
    if (c >= Rat(0)) {
      auto it = mult.find({nu, d});
      return it == mult.end() ? 0 : it->second;
    }
    long long ci = c.as_int();
    for (int i = 0; i < r.rank(); ++i) nu[i] += static_cast<int>(ci) * r.theta()[i];
    d += static_cast<int>(ci);
  }
}

AffineWeights affine_weight_system(const RootSystemPtr& rs, int level, const IntLabels& lambda,
                                   int depth) {
  if (depth > kMaxGradedDepth)
    throw std::invalid_argument("graded depth capped at " + std::to_string(kMaxGradedDepth));
  const int n = rs->rank();
  const long long m = level + rs->dual_coxeter();
  IntLabels rho(n, 1), lr(lambda);
  for (auto& x : lr) x += 1;
  Rat top = rs->inner(lr, lr);

  AffineWeights aw;
  aw.rs = rs;
  aw.level = level;
  aw.lambda = lambda;
  aw.depth = depth;

  std::vector<std::pair<IntLabels, bool>> allroots;
  for (const auto& a : rs->positive_roots()) {
    allroots.emplace_back(a, true);
    IntLabels neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    allroots.emplace_back(neg, false);
  }

  for (int d = 0; d <= depth; ++d) {
    Rat bound = top + Rat(2LL * m * d);
    auto cands = dominant_candidates(*rs, lambda, bound, /*require_below=*/false);
    // keep affine-dominant candidates below the affine highest weight
    std::vector<IntLabels> keep;
    for (auto& mu : cands) {
      long long lvl = 0;
      for (int i = 0; i < n; ++i) lvl += static_cast<long long>(mu[i]) * rs->comarks()[i];
      if (lvl > level) continue;
      IntLabels diff(n);
      for (int i = 0; i < n; ++i) diff[i] = lambda[i] + d * rs->theta()[i] - mu[i];
      RatVec co = rs->root_coords(diff);
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if (co(i) < Rat(0)) ok = false;
      if (ok) keep.push_back(mu);
    }
    std::sort(keep.begin(), keep.end(), [&](const IntLabels& a, const IntLabels& b) {
      return rs->inner(a, rho) > rs->inner(b, rho);
    });
    for (const auto& mu : keep) {
      if (d == 0 && mu == lambda) {
        aw.mult[{mu, 0}] = 1;
        continue;
      }
      IntLabels mr(mu);
      for (auto& x : mr) x += 1;
      Rat den = top - rs->inner(mr, mr) + Rat(2LL * m * d);
      if (den.is_zero()) throw std::logic_error("affine Freudenthal: zero denominator");
      Rat s;
      for (const auto& [a, positive] : allroots) {
        for (int nn = positive ? 0 : 1; nn <= d; ++nn) {
          for (int j = 1;; ++j) {
            if (nn > 0 && j > d / nn) break;
            IntLabels nu(n);
            for (int i = 0; i < n; ++i) nu[i] = mu[i] + j * a[i];
            long long mm = aw.lookup(nu, d - j * nn);
            if (mm == 0 && nn == 0) break;
            if (mm != 0) s += Rat(mm) * (rs->inner(nu, a) + Rat(1LL * level * nn));
          }
        }
      }
      for (int nn = 1; nn <= d; ++nn)
        for (int j = 1; j <= d / nn; ++j)
          s += Rat(1LL * n * level * nn) * Rat(aw.lookup(mu, d - j * nn));
      Rat mv = Rat(2) * s / den;
      long long mi = mv.as_int();
      if (mi < 0) throw std::logic_error("affine Freudenthal: negative multiplicity");
      if (mi) aw.mult[{mu, d}] = mi;
    }
  }
  return aw;
}

std::vector<std::pair<IntLabels, long long>> depth_slice(const AffineWeights& aw, int d) {
  const auto& rs = *aw.rs;
  IntLabels lr(aw.lambda);
  for (auto& x : lr) x += 1;
  Rat bound = rs.inner(lr, lr) + Rat(2LL * (aw.level + rs.dual_coxeter()) * d);
  auto cands = dominant_candidates(rs, aw.lambda, bound, /*require_below=*/false);
  std::vector<std::pair<IntLabels, long long>> out;
  for (const auto& mu : cands) {
    long long mv = aw.lookup(mu, d);
    if (!mv) continue;
    std::set<IntLabels> orbit{mu};
    std::vector<IntLabels> frontier{mu};
    while (!frontier.empty()) {
      std::vector<IntLabels> next;
      for (const auto& v : frontier)
        for (int i = 0; i < rs.rank(); ++i) {
          IntLabels w = rs.reflect(i, v);
          if (orbit.insert(w).second) next.push_back(w);
        }
      frontier = std::move(next);
    }
    for (const auto& w : orbit) out.emplace_back(w, mv);
  }
  return out;
}

std::vector<long long> graded_dims_component(const RootSystemPtr& rs, int level,
                                             const IntLabels& lambda, int depth) {
  auto aw = affine_weight_system(rs, level, lambda, depth);
  std::vector<long long> dims(depth + 1, 0);
  for (int d = 0; d <= depth; ++d) {
    IntLabels lr(lambda);
    for (auto& x : lr) x += 1;
    Rat bound = rs->inner(lr, lr) + Rat(2LL * (level + rs->dual_coxeter()) * d);
    for (const auto& mu : dominant_candidates(*rs, lambda, bound, false)) {
      long long mv = aw.lookup(mu, d);
      if (mv) dims[d] += mv * static_cast<long long>(rs->orbit_size(mu));
    }
  }
  return dims;
}

std::vector<long long> graded_dims(const AlgebraSpec& spec, const ModuleLabel& m, int depth) {
  if (depth > kMaxGradedDepth)
    throw std::invalid_argument("graded depth capped at " + std::to_string(kMaxGradedDepth));
  std::vector<std::vector<long long>> per;
  for (size_t c = 0; c < spec.components.size(); ++c)
    per.push_back(
        graded_dims_component(spec.components[c].rs, spec.components[c].level, m.parts[c], depth));
  std::vector<long long> out(depth + 1, 0);
  std::vector<int> ds(per.size(), 0);
  auto rec = [&](auto&& self, size_t c, int used) -> void {
    if (c == per.size()) {
      long long prod = 1;
      for (size_t i = 0; i < per.size(); ++i) prod *= per[i][ds[i]];
      out[used] += prod;
      return;
    }
    for (int d = 0; used + d <= depth; ++d) {
      ds[c] = d;
      self(self, c + 1, used + d);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace voa

#include "voa/innerauto.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace voa {

TwistVector parse_twist(const std::string& s, const AlgebraSpec& spec) {
  TwistVector u;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == 'x') {
      ++i;
      continue;
    }
    if (s[i] != '[') throw std::invalid_argument("bad twist vector '" + s + "'");
    auto j = s.find(']', i);
    if (j == std::string::npos) throw std::invalid_argument("bad twist vector '" + s + "'");
    std::string body = s.substr(i + 1, j - i - 1);
    std::vector<Rat> entries;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) entries.push_back(Rat::parse(tok));
    Weight w(entries.size());
    for (size_t k = 0; k < entries.size(); ++k) w(static_cast<Eigen::Index>(k)) = entries[k];
    u.parts.push_back(std::move(w));
    i = j + 1;
  }
  if (u.parts.size() != spec.components.size())
    throw std::invalid_argument("twist vector has " + std::to_string(u.parts.size()) +
                                " components, spec needs " +
                                std::to_string(spec.components.size()));
  for (size_t c = 0; c < u.parts.size(); ++c)
    if (u.parts[c].size() != spec.components[c].rs->rank())
      throw std::invalid_argument("twist vector rank mismatch in component " + std::to_string(c));
  return u;
}

std::string twist_str(const TwistVector& u) {
  std::string s;
  for (size_t c = 0; c < u.parts.size(); ++c) {
    if (c) s += "x";
    s += "[";
    for (Eigen::Index i = 0; i < u.parts[c].size(); ++i) {
      if (i) s += ",";
      s += u.parts[c](i).str();
    }
    s += "]";
  }
  return s;
}

Rat twist_norm(const AlgebraSpec& spec, const TwistVector& u) {
  Rat s;
  for (size_t c = 0; c < u.parts.size(); ++c)
    s += Rat(spec.components[c].level) *
         spec.components[c].rs->inner(u.parts[c], u.parts[c]);
  return s;
}

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

long long denominator_of(const Rat& r) { return static_cast<long long>(r.den()); }

}  // namespace

long long sigma_order(const AlgebraSpec& spec, const TwistVector& u,
                      const std::vector<ModuleLabel>& modules) {
  long long n = 1;
  for (size_t c = 0; c < u.parts.size(); ++c) {
    const auto& rs = *spec.components[c].rs;
    for (int i = 0; i < rs.rank(); ++i) {
      // labels of alpha_i are the i-th Cartan row
      Weight alpha(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) alpha(j) = rs.cartan()(i, j);
      n = lcm_ll(n, denominator_of(rs.inner(u.parts[c], alpha)));
    }
  }
  for (const auto& m : modules) {
    Rat total;
    for (size_t c = 0; c < u.parts.size(); ++c)
      total += spec.components[c].rs->inner(u.parts[c], m.parts[c]);
    n = lcm_ll(n, denominator_of(total));
  }
  return n;
}

std::string FixedSubalgebra::type_string() const {
  std::string s;
  for (size_t i = 0; i < simple_parts.size(); ++i) {
    if (i) s += "+";
    s += std::string(1, static_cast<char>(simple_parts[i].family)) +
         std::to_string(simple_parts[i].rank) + "_" + std::to_string(simple_parts[i].level);
  }
  for (int i = 0; i < u1_count; ++i) s += s.empty() && i == 0 ? "U1" : "+U1";
  if (simple_parts.empty() && u1_count == 0) s = "0";
  return s;
}

FixedSubalgebra fixed_subalgebra(const AlgebraSpec& spec, const TwistVector& u) {
  FixedSubalgebra out;
  long long nroots = 0;
  int fixed_rank = 0;
  for (size_t c = 0; c < spec.components.size(); ++c) {
    const auto& rs = *spec.components[c].rs;
    const int k = spec.components[c].level;
    std::vector<IntLabels> fixed;
    for (const auto& a : rs.positive_roots()) {
      if (!rs.inner(u.parts[c], a).is_integer()) continue;
      fixed.push_back(a);
      IntLabels neg(a.size());
      for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      fixed.push_back(neg);
    }
    nroots += static_cast<long long>(fixed.size());
    if (fixed.empty()) continue;
    for (const auto& comp : classify_subsystem(fixed, rs)) {
      Rat lvl = Rat(2LL * k) / comp.theta_norm;
      if (!lvl.is_integer())
        throw std::logic_error("non-integral level for fixed subalgebra component");
      out.simple_parts.push_back({comp.family, comp.rank, static_cast<int>(lvl.as_int())});
      fixed_rank += comp.rank;
    }
  }
  std::sort(out.simple_parts.begin(), out.simple_parts.end(),
            [](const FixedSubalgebra::Part& a, const FixedSubalgebra::Part& b) {
              if (a.family != b.family) return static_cast<char>(a.family) < static_cast<char>(b.family);
              if (a.rank != b.rank) return a.rank > b.rank;
              return a.level > b.level;
            });
  out.u1_count = spec.total_rank() - fixed_rank;
  out.dim = nroots + spec.total_rank();
  return out;
}

std::vector<Weight> twisted_weight_shift(const AlgebraSpec& spec, const std::vector<Weight>& mu,
                                         const TwistVector& u) {
  std::vector<Weight> out;
  for (size_t c = 0; c < mu.size(); ++c) {
    Weight w = mu[c];
    for (Eigen::Index i = 0; i < w.size(); ++i)
      w(i) += Rat(spec.components[c].level) * u.parts[c](i);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Weight> lowest_weight(const AlgebraSpec& spec, const ModuleLabel& m) {
  std::vector<Weight> out;
  for (size_t c = 0; c < m.parts.size(); ++c) {
    const auto& rs = *spec.components[c].rs;
    IntLabels star = rs.star(m.parts[c]);
    Weight w(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) w(i) = Rat(-star[i]);
    out.push_back(std::move(w));
  }
  return out;
}

Rat twisted_conformal_weight(const AlgebraSpec& spec, const ModuleLabel& m, const TwistVector& u) {
  // hypothesis (u|alpha) >= -1 for every root
  for (size_t c = 0; c < spec.components.size(); ++c) {
    const auto& rs = *spec.components[c].rs;
    for (const auto& a : rs.positive_roots()) {
      Rat p = rs.inner(u.parts[c], a);
      if (p > Rat(1) || p < Rat(-1))
        throw std::domain_error(
            "twist vector violates (u|alpha) >= -1; replace u by a Weyl translate");
    }
  }
  Rat tw = conformal_weight(spec, m);
  for (size_t c = 0; c < spec.components.size(); ++c) {
    bool any = false;
    for (Eigen::Index i = 0; i < u.parts[c].size(); ++i)
      if (!u.parts[c](i).is_zero()) any = true;
    if (!any) continue;
    auto ws = weight_system_component(spec.components[c].rs, m.parts[c]);
    tw += ws.min_pairing(u.parts[c]);
  }
  return tw + twist_norm(spec, u) / Rat(2);
}

TwistReport twist_report(const AlgebraSpec& spec, const ModuleLabel& m, const TwistVector& u) {
  TwistReport r;
  r.module = m;
  r.conformal_weight = conformal_weight(spec, m);
  Rat p;
  for (size_t c = 0; c < spec.components.size(); ++c)
    p += spec.components[c].rs->inner(u.parts[c], m.parts[c]);
  r.pairing = p;
  r.twisted_cw = twisted_conformal_weight(spec, m, u);
  return r;
}

std::vector<ModuleLabel> integral_cw2_census(const AlgebraSpec& spec) {
  std::vector<ModuleLabel> out;
  for (const auto& m : level_weights(spec)) {
    Rat h = conformal_weight(spec, m);
    if (h.is_integer() && h >= Rat(2)) out.push_back(m);
  }
  return out;
}

}  // namespace voa

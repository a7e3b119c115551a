#include "voa/orbifold.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "voa/modular.hpp"

namespace voa {

SchellekensReport schellekens_check(const AlgebraSpec& spec, long long dim_v1, int abelian_rank) {
  SchellekensReport rep;
  const Rat rhs = Rat(dim_v1 - 24) / Rat(24);
  rep.ok = true;
  long long dimsum = abelian_rank;
  for (const auto& c : spec.components) {
    SchellekensReport::Ideal id;
    id.name = c.rs->name() + "_" + std::to_string(c.level);
    id.lhs = Rat(c.rs->dual_coxeter()) / Rat(c.level);
    id.rhs = rhs;
    id.ok = (id.lhs == rhs);
    rep.ok = rep.ok && id.ok;
    rep.ideals.push_back(id);
    dimsum += 2 * positive_root_count(c.rs->family(), c.rs->rank()) + c.rs->rank();
  }
  rep.dim_consistent = (dimsum == dim_v1);
  rep.ok = rep.ok && rep.dim_consistent;
  return rep;
}

ConditionICertificate condition_I_certificate(const AlgebraSpec& spec, const TwistVector& u) {
  ConditionICertificate cert;
  auto census = integral_cw2_census(spec);
  cert.candidate_count = static_cast<long long>(census.size());
  ModuleLabel vac;
  for (const auto& c : spec.components) vac.parts.push_back(IntLabels(c.rs->rank(), 0));
  std::vector<ModuleLabel> mods = census;
  mods.push_back(vac);
  cert.order = sigma_order(spec, u, mods);
  if (cert.order != 2) {
    cert.failure = "sigma_u has order " + std::to_string(cert.order) + " on the module set";
    return cert;
  }
  bool first = true;
  for (const auto& m : mods) {
    Rat tw = twisted_conformal_weight(spec, m, u);
    Rat twice = tw * Rat(2);
    if (!twice.is_integer() || !(tw > Rat(0))) {
      cert.failure = "twisted weight " + tw.str() + " of " + label_str(m) +
                     " is not a positive half-integer";
      return cert;
    }
    if (first || tw < cert.min_twisted_cw) {
      cert.min_twisted_cw = tw;
      first = false;
    }
  }
  if (cert.min_twisted_cw < Rat(1)) {
    cert.failure = "minimum twisted weight " + cert.min_twisted_cw.str() + " is below one";
    return cert;
  }
  cert.certified = true;
  cert.dim_twisted_half = 0;
  return cert;
}

long long orbifold_dim_v1(long long a, long long b, long long c) { return 3 * a - b - c + 24; }

const std::vector<Table6Case>& table6_cases() {
  static const std::vector<Table6Case> cases = {
      {"C4_10", "[0,1,0,0]"},
      {"D7_3+A3_1+G2_1", "[0,0,0,0,1/2,0,0]x[0,1/2,0]x[0,0]"},
      {"A5_6+C2_3+A1_2", "[1/2,0,0,0,0]x[0,1/2]x[0]"},
      {"C7_2+A3_1", "[0,0,0,0,0,0,1/2]x[0,1/2,0]"},
      {"D5_4+C3_2+A1_1+A1_1", "[0,0,0,0,1/2]x[0,0,1/2]x[0]x[0]"},
      {"E6_4+C2_1+A2_1", "[0,1/2,0,0,0,0]x[1,0]x[1/2,1/2]"},
  };
  return cases;
}

Table6Row run_table6_case(const Table6Case& c) {
  Table6Row row;
  row.algebra = c.algebra;
  row.u = c.u;
  AlgebraSpec spec = parse_algebra_spec(c.algebra);
  TwistVector u = parse_twist(c.u, spec);
  row.dim_v1 = spec.dim();
  row.norm = twist_norm(spec, u);
  auto fs = fixed_subalgebra(spec, u);
  row.fixed_type = fs.type_string();
  row.fixed_dim = fs.dim;
  auto cert = condition_I_certificate(spec, u);
  row.condition_I = cert.certified;
  row.dim_tilde_v1 =
      cert.certified ? orbifold_dim_v1(fs.dim, cert.dim_twisted_half, row.dim_v1) : -1;
  return row;
}

MultiplicitySystem build_multiplicity_system(
    const AlgebraSpec& spec, long long dim_v1, long long dim_v2,
    const std::vector<std::pair<int, IntLabels>>& probes) {
  MultiplicitySystem sys;
  sys.spec = spec;
  for (const auto& m : level_weights(spec))
    if (conformal_weight(spec, m) == Rat(2)) sys.candidates.push_back(m);

  const int nc = spec.num_components();
  // vacuum module depth <= 2 data per component
  std::vector<AffineWeights> vac;
  std::vector<std::vector<long long>> vdims;
  for (int c = 0; c < nc; ++c) {
    IntLabels zero(spec.components[c].rs->rank(), 0);
    vac.push_back(affine_weight_system(spec.components[c].rs, spec.components[c].level, zero, 2));
    vdims.push_back(
        graded_dims_component(spec.components[c].rs, spec.components[c].level, zero, 2));
  }
  long long vac2 = 0;
  std::function<void(int, int, long long)> conv = [&](int c, int depth_left, long long prod) {
    if (c == nc) {
      if (depth_left == 0) vac2 += prod;
      return;
    }
    for (int d = 0; d <= depth_left; ++d) conv(c + 1, depth_left - d, prod * vdims[c][d]);
  };
  conv(0, 2, 1);
  sys.vacuum_depth2 = vac2;
  sys.dim_rhs = dim_v2 - vac2;

  for (const auto& m : sys.candidates) {
    Rat d(1);
    for (int c = 0; c < nc; ++c) d *= weyl_dim_component(*spec.components[c].rs, m.parts[c]);
    sys.dims.push_back(d.as_int());
  }

  for (const auto& [ci, zlab] : probes) {
    const auto& rs = *spec.components[ci].rs;
    Weight z = rs.to_weight(zlab);
    // <z,z> in the VOA form
    Rat zz = Rat(spec.components[ci].level) * rs.inner(z, z);
    Rat rhs = Rat(32808 - 2 * dim_v1) * zz;
    // vacuum depth-2 moment: convolve per-component slice moments
    std::vector<std::vector<Rat>> mom(nc);  // [c][d] = S^2 of depth-d slice (0 off-probe)
    for (int c = 0; c < nc; ++c) {
      mom[c].assign(3, Rat(0));
      if (c != ci) continue;
      for (int d = 0; d <= 2; ++d)
        for (const auto& [w, mult] : depth_slice(vac[c], d)) {
          Rat p = rs.inner(z, w);
          mom[c][d] += Rat(mult) * p * p;
        }
    }
    Rat vacmom;
    std::function<void(int, int, long long, int)> conv2 = [&](int c, int depth_left, long long dimprod,
                                                              int probe_depth) {
      if (c == nc) {
        if (depth_left == 0 && probe_depth >= 0) vacmom += Rat(dimprod) * mom[ci][probe_depth];
        return;
      }
      for (int d = 0; d <= depth_left; ++d) {
        if (c == ci)
          conv2(c + 1, depth_left - d, dimprod, d);
        else
          conv2(c + 1, depth_left - d, dimprod * vdims[c][d], probe_depth);
      }
    };
    conv2(0, 2, 1, -1);
    std::vector<Rat> coeffs;
    for (const auto& m : sys.candidates) {
      Rat pref(1);
      for (int c = 0; c < nc; ++c)
        if (c != ci) pref *= weyl_dim_component(*spec.components[c].rs, m.parts[c]);
      auto ws = weight_system_component(spec.components[ci].rs, m.parts[ci]);
      coeffs.push_back(pref * second_moment(ws, z));
    }
    sys.probe_coeff.push_back(std::move(coeffs));
    sys.probe_rhs.push_back(rhs - vacmom);
  }
  return sys;
}

MultiplicitySolution solve_multiplicities(const MultiplicitySystem& sys) {
  MultiplicitySolution sol;
  const size_t n = sys.candidates.size();
  struct Row {
    std::vector<Rat> c;
    Rat rhs;
  };
  std::vector<Row> rows;
  for (size_t p = 0; p < sys.probe_coeff.size(); ++p)
    rows.push_back({sys.probe_coeff[p], sys.probe_rhs[p]});
  {
    std::vector<Rat> dc;
    for (long long d : sys.dims) dc.push_back(Rat(d));
    rows.push_back({dc, Rat(sys.dim_rhs)});
  }
  for (const auto& r : rows)
    if (r.rhs < Rat(0)) return sol;  // infeasible outright

  std::vector<long long> cur(n, 0);
  std::function<void(size_t, const std::vector<Rat>&)> rec = [&](size_t i,
                                                                 const std::vector<Rat>& used) {
    if (i == n) {
      for (size_t r = 0; r < rows.size(); ++r)
        if (!(used[r] == rows[r].rhs)) return;
      sol.solutions.push_back(cur);
      return;
    }
    long long maxv = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].c[i].is_zero() || !(rows[r].c[i] > Rat(0))) continue;
      Rat room = (rows[r].rhs - used[r]) / rows[r].c[i];
      long long b = room < Rat(0) ? -1 : static_cast<long long>(room.num() / room.den());
      if (maxv < 0 || b < maxv) maxv = b;
    }
    if (maxv < 0) maxv = 0;
    for (long long v = 0; v <= maxv; ++v) {
      std::vector<Rat> next = used;
      bool feasible = true;
      for (size_t r = 0; r < rows.size(); ++r) {
        next[r] += rows[r].c[i] * Rat(v);
        if (next[r] > rows[r].rhs) feasible = false;
      }
      if (!feasible) continue;
      cur[i] = v;
      rec(i + 1, next);
      cur[i] = 0;
    }
  };
  rec(0, std::vector<Rat>(rows.size(), Rat(0)));
  return sol;
}

std::vector<MirrorRow> mirror_consistency(
    const std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>>& pairs) {
  auto a3 = get_modular_data(get_root_system(Family::A, 3), 8);
  auto a7 = get_modular_data(get_root_system(Family::A, 7), 4);
  const auto& rs3 = *get_root_system(Family::A, 3);
  std::vector<MirrorRow> out;
  for (const auto& [a, psi, cw, dim1] : pairs) {
    MirrorRow row;
    row.a = a;
    row.psi_a = psi;
    row.cw = cw;
    row.dim1 = dim1;
    row.qdim_a = a3->qdim(a3->idx(a));
    row.qdim_psi = a7->qdim(a7->idx(psi));
    row.qdim_ok = std::abs(row.qdim_a - row.qdim_psi) <= kQdimTol;
    Rat h = conformal_weight_component(rs3, 8, a);
    row.cw_ok = (h == cw);
    long long d1;
    if (h == Rat(0))
      d1 = 15;  // weight-one space of the vacuum: the Lie algebra itself
    else if (h == Rat(1))
      d1 = weyl_dim_component(rs3, a).as_int();
    else
      d1 = 0;
    row.dim1_ok = (d1 == dim1);
    out.push_back(row);
  }
  return out;
}

std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>> builtin_mirror_pairs() {
  return {
      {{0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, Rat(0), 15},
      {{8, 0, 0}, {0, 4, 0, 0, 0, 0, 0}, Rat(3), 0},
      {{0, 8, 0}, {0, 0, 0, 4, 0, 0, 0}, Rat(4), 0},
      {{0, 0, 8}, {0, 0, 0, 0, 0, 4, 0}, Rat(3), 0},
      {{2, 1, 4}, {1, 0, 1, 1, 0, 0, 0}, Rat(2), 0},
      {{1, 2, 1}, {1, 1, 0, 0, 0, 1, 1}, Rat(1), 175},
      {{1, 4, 1}, {0, 1, 1, 0, 1, 1, 0}, Rat(2), 0},
      {{4, 1, 2}, {0, 0, 0, 1, 1, 0, 1}, Rat(2), 0},
  };
}

std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>> load_mirror_pairs(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mirror data file: " + path);
  std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>> out;
  std::string line;
  auto parse_labels = [](const std::string& s) {
    IntLabels l;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) l.push_back(std::stoi(tok));
    return l;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string a, b, c, d;
    if (!std::getline(ss, a, '\t') || !std::getline(ss, b, '\t') || !std::getline(ss, c, '\t') ||
        !std::getline(ss, d, '\t'))
      throw std::runtime_error("bad mirror data line: " + line);
    out.emplace_back(parse_labels(a), parse_labels(b), Rat::parse(c), std::stoll(d));
  }
  return out;
}

}  // namespace voa

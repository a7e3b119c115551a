#include "voa/modular.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace voa {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

// Orthogonal-model coordinates of lambda + rho, multiplied by `scale` so all
// entries are integers. The representative lies in the span of the simple
// roots (traceless for type A).
std::vector<long long> model_coords(const RootSystem& rs, const IntLabels& lambda,
                                    long long scale) {
  const int n = rs.rank();
  RatVec v(n);
  for (int i = 0; i < n; ++i) v(i) = Rat(lambda[i] + 1);
  // coords = sum_i t_i alpha_i with C^T t = v
  RatMat aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = rs.cartan()(j, i);
    aug(i, n) = v(i);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && aug(p, c).is_zero()) ++p;
    if (p != c) aug.row(p).swap(aug.row(c));
    Rat piv = aug(c, c);
    for (int j = 0; j <= n; ++j) aug(c, j) /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || aug(r, c).is_zero()) continue;
      Rat f = aug(r, c);
      for (int j = 0; j <= n; ++j) aug(r, j) -= f * aug(c, j);
    }
  }
  const auto dim = rs.simple_coords().cols();
  std::vector<long long> out(dim, 0);
  for (Eigen::Index k = 0; k < dim; ++k) {
    Rat ck;
    for (int i = 0; i < n; ++i) ck += aug(i, n) * rs.simple_coords()(i, k);
    out[k] = (ck * Rat(scale)).as_int();
  }
  return out;
}

// Streams every element of a classical Weyl group as (det, w(x)).
template <typename F>
void stream_classical(Family fam, int dim, const std::vector<long long>& x, F&& emit) {
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long long> y(dim), z(dim);
  std::vector<char> vis(dim);
  do {
    std::fill(vis.begin(), vis.end(), 0);
    int parity = 0;
    for (int i = 0; i < dim; ++i) {
      if (vis[i]) continue;
      int len = 0;
      for (int j = i; !vis[j]; j = perm[j]) {
        vis[j] = 1;
        ++len;
      }
      parity ^= (len - 1) & 1;
    }
    const int psign = parity ? -1 : 1;
    for (int i = 0; i < dim; ++i) y[i] = x[perm[i]];
    if (fam == Family::A) {
      emit(psign, y);
      continue;
    }
    const bool even_only = (fam == Family::D);
    const unsigned maskend = 1u << dim;
    for (unsigned mask = 0; mask < maskend; ++mask) {
      const int pc = __builtin_popcount(mask);
      if (even_only && (pc & 1)) continue;
      const int sign = even_only ? psign : (pc & 1 ? -psign : psign);
      for (int i = 0; i < dim; ++i) z[i] = (mask >> i) & 1 ? -y[i] : y[i];
      emit(sign, z);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Reflection-matrix closure in the label basis, for the exceptional families.
struct MatrixGroup {
  int n = 0;
  std::vector<std::vector<int16_t>> mats;
  std::vector<int8_t> signs;
};

const MatrixGroup& matrix_group(const RootSystem& rs) {
  static std::mutex mx;
  static std::map<std::string, MatrixGroup> cache;
  std::lock_guard<std::mutex> lock(mx);
  auto it = cache.find(rs.name());
  if (it != cache.end()) return it->second;
  const int n = rs.rank();
  auto mult = [n](const std::vector<int16_t>& a, const std::vector<int16_t>& b) {
    std::vector<int16_t> c(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const int aik = a[i * n + k];
        if (!aik) continue;
        for (int j = 0; j < n; ++j) {
          int v = c[i * n + j] + aik * b[k * n + j];
          c[i * n + j] = static_cast<int16_t>(v);
        }
      }
    return c;
  };
  std::vector<std::vector<int16_t>> gens;
  for (int i = 0; i < n; ++i) {
    // s_i(v)_j = v_j - v_i C(i,j): modifies column i of the identity
    std::vector<int16_t> m(n * n, 0);
    for (int r = 0; r < n; ++r) m[r * n + r] = 1;
    for (int j = 0; j < n; ++j)
      m[j * n + i] = static_cast<int16_t>(m[j * n + i] - rs.cartan()(i, j).as_int());
    gens.push_back(std::move(m));
  }
  MatrixGroup g;
  g.n = n;
  std::map<std::vector<int16_t>, int8_t> seen;
  std::vector<int16_t> id(n * n, 0);
  for (int r = 0; r < n; ++r) id[r * n + r] = 1;
  seen[id] = 1;
  std::vector<std::vector<int16_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int16_t>> next;
    for (const auto& w : frontier) {
      const int8_t sw = seen[w];
      for (const auto& s : gens) {
        auto ws = mult(w, s);
        auto [it2, inserted] = seen.emplace(std::move(ws), static_cast<int8_t>(-sw));
        if (inserted) next.push_back(it2->first);
      }
    }
    frontier = std::move(next);
  }
  for (auto& [m, s] : seen) {
    g.mats.push_back(m);
    g.signs.push_back(s);
  }
  if (g.mats.size() != rs.weyl_order())
    throw std::logic_error("Weyl closure size mismatch for " + rs.name());
  return cache.emplace(rs.name(), std::move(g)).first->second;
}

template <typename Real>
struct Kahan {
  std::complex<Real> sum{0, 0};
  std::complex<Real> c{0, 0};
  void add(const std::complex<Real>& v) {
    const std::complex<Real> y = v - c;
    const std::complex<Real> t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> raw_weyl_sum(
    const RootSystem& rs, int level, const std::vector<IntLabels>& labels, bool progress) {
  using Cplx = std::complex<Real>;
  const int nl = static_cast<int>(labels.size());
  const long long m = level + rs.dual_coxeter();
  Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic> A(nl, nl);
  A.setZero();

  const bool classical = is_classical(rs.family());
  long long scale = 1, formnum = 1, formden = 1;
  if (classical) {
    switch (rs.family()) {
      case Family::A: scale = rs.rank() + 1; break;
      case Family::B:
      case Family::D: scale = 2; break;
      case Family::C: formden = 2; break;
      default: break;
    }
  }
  // exact phases: pairing/m = dot * formnum / T with T below
  const long long T = classical ? m * formden * scale * scale : m * rs.gram_den();
  std::vector<Cplx> table(T);
  for (long long q = 0; q < T; ++q) {
    const long double ang = -2.0L * kPi * static_cast<long double>(q) / static_cast<long double>(T);
    table[q] = Cplx(static_cast<Real>(cosl(ang)), static_cast<Real>(sinl(ang)));
  }

  std::vector<std::vector<long long>> Y(nl);
  const int n = rs.rank();
  if (classical) {
    for (int i = 0; i < nl; ++i) Y[i] = model_coords(rs, labels[i], scale);
  } else {
    for (int i = 0; i < nl; ++i) {
      Y[i].assign(n, 0);
      for (int r = 0; r < n; ++r) {
        long long s = 0;
        for (int c = 0; c < n; ++c) s += rs.gram_num()[r][c] * (labels[i][c] + 1);
        Y[i][r] = s;
      }
    }
  }

  std::atomic<int> done{0};
  auto do_row = [&](int li) {
    std::vector<Kahan<Real>> acc(nl - li);
    if (classical) {
      const auto X = model_coords(rs, labels[li], scale);
      const int dim = static_cast<int>(X.size());
      stream_classical(rs.family(), dim, X, [&](int sign, const std::vector<long long>& y) {
        for (int mj = li; mj < nl; ++mj) {
          long long dotv = 0;
          const auto& ym = Y[mj];
          for (int k = 0; k < dim; ++k) dotv += y[k] * ym[k];
          const long long q = ((dotv * formnum) % T + T) % T;
          const Cplx& ph = table[q];
          acc[mj - li].add(sign > 0 ? ph : -ph);
        }
      });
    } else {
      const auto& grp = matrix_group(rs);
      std::vector<long long> X(n), y(n);
      for (int c = 0; c < n; ++c) X[c] = labels[li][c] + 1;
      for (size_t g = 0; g < grp.mats.size(); ++g) {
        const int16_t* M = grp.mats[g].data();
        for (int r = 0; r < n; ++r) {
          long long s = 0;
          for (int c = 0; c < n; ++c) s += M[r * n + c] * X[c];
          y[r] = s;
        }
        const int sign = grp.signs[g];
        for (int mj = li; mj < nl; ++mj) {
          long long dotv = 0;
          const auto& ym = Y[mj];
          for (int k = 0; k < n; ++k) dotv += y[k] * ym[k];
          const long long q = (dotv % T + T) % T;
          const Cplx& ph = table[q];
          acc[mj - li].add(sign > 0 ? ph : -ph);
        }
      }
    }
    for (int mj = li; mj < nl; ++mj) {
      A(li, mj) = acc[mj - li].sum;
      A(mj, li) = acc[mj - li].sum;
    }
    const int d = ++done;
    if (progress && (d % 4 == 0 || d == nl))
      std::cerr << "\rsmatrix " << rs.name() << "_" << level << ": " << d << "/" << nl << " rows"
                << std::flush;
  };

  unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
  if (nl < 8) nthreads = 1;
  std::atomic<int> next_row{0};
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < nthreads; ++t)
    threads.emplace_back([&]() {
      for (;;) {
        const int row = next_row++;
        if (row >= nl) return;
        do_row(row);
      }
    });
  for (auto& th : threads) th.join();
  if (progress) std::cerr << "\n";
  return A;
}

template <typename Real>
void normalize_smatrix(Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>& A) {
  using Cplx = std::complex<Real>;
  Real norm0 = 0;
  for (Eigen::Index j = 0; j < A.cols(); ++j) norm0 += std::norm(A(0, j));
  const Real inv = Real(1) / std::sqrt(norm0);
  const Cplx ph = A(0, 0) / std::abs(A(0, 0));
  A *= std::conj(ph) * inv;
}

Precision default_precision() {
  const char* env = std::getenv("VOA_PRECISION");
  if (env && std::string(env) == std::string("extended")) return Precision::Extended;
  return Precision::Double;
}

ModularData build_modular_data(const RootSystemPtr& rs, int level, Precision prec) {
  ModularData md;
  md.rs = rs;
  md.level = level;
  md.precision = prec;
  md.labels = level_weights_component(*rs, level);
  const int nl = md.num();
  const bool progress =
      static_cast<double>(rs->weyl_order()) * nl * nl > 5e8 && isatty(2 /*stderr*/);

  if (prec == Precision::Double) {
    auto A = raw_weyl_sum<double>(*rs, level, md.labels, progress);
    normalize_smatrix(A);
    md.S = A;
  } else {
    auto A = raw_weyl_sum<long double>(*rs, level, md.labels, progress);
    normalize_smatrix(A);
    md.S.resize(nl, nl);
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nl; ++j)
        md.S(i, j) = std::complex<double>(static_cast<double>(A(i, j).real()),
                                          static_cast<double>(A(i, j).imag()));
  }

  md.h.reserve(nl);
  for (const auto& l : md.labels) md.h.push_back(conformal_weight_component(*rs, level, l));
  md.qdim.resize(nl);
  for (int i = 0; i < nl; ++i) md.qdim(i) = qdim_component(*rs, level, md.labels[i]);

  Eigen::MatrixXcd U = md.S * md.S.adjoint();
  md.unitarity_residual = (U - Eigen::MatrixXcd::Identity(nl, nl)).cwiseAbs().maxCoeff();
  md.symmetry_residual = (md.S - Eigen::MatrixXcd(md.S.transpose())).cwiseAbs().maxCoeff();

  Eigen::MatrixXcd S2 = md.S * md.S;
  md.conjugation.assign(nl, -1);
  double s2resid = 0;
  for (int i = 0; i < nl; ++i) {
    int best = -1;
    double bestv = 0;
    for (int j = 0; j < nl; ++j) {
      const double v = std::abs(S2(i, j));
      if (v > bestv) {
        bestv = v;
        best = j;
      }
    }
    md.conjugation[i] = best;
    for (int j = 0; j < nl; ++j)
      s2resid = std::max(s2resid, std::abs(std::abs(S2(i, j)) - (j == best ? 1.0 : 0.0)));
  }
  md.unitarity_residual = std::max(md.unitarity_residual, s2resid);
  double qr = 0;
  for (int i = 0; i < nl; ++i)
    qr = std::max(qr, std::abs(md.S(0, i).real() / md.S(0, 0).real() - md.qdim(i)));
  md.qdim_vs_s_residual = qr;
  return md;
}

std::mutex g_md_mutex;
std::map<std::tuple<std::string, int, int>, ModularDataPtr> g_md_cache;

}  // namespace

int ModularData::idx(const IntLabels& l) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), l);
  if (it == labels.end() || *it != l) throw std::invalid_argument("label not in spectrum");
  return static_cast<int>(it - labels.begin());
}

double qdim_component(const RootSystem& rs, int level, const IntLabels& lambda) {
  const double m = level + rs.dual_coxeter();
  IntLabels lr(lambda);
  for (auto& x : lr) x += 1;
  IntLabels rho(rs.rank(), 1);
  double q = 1.0;
  for (const auto& a : rs.positive_roots())
    q *= std::sin(kPi * rs.inner(lr, a).to_double() / m) /
         std::sin(kPi * rs.inner(rho, a).to_double() / m);
  return q;
}

ModularDataPtr get_modular_data(const RootSystemPtr& rs, int level) {
  return get_modular_data(rs, level, default_precision());
}

ModularDataPtr get_modular_data(const RootSystemPtr& rs, int level, Precision p) {
  {
    std::lock_guard<std::mutex> lock(g_md_mutex);
    auto it = g_md_cache.find({rs->name(), level, static_cast<int>(p)});
    if (it != g_md_cache.end()) return it->second;
  }
  ModularData md = build_modular_data(rs, level, p);
  const bool ok = md.unitarity_residual <= kUnitarityTol &&
                  md.symmetry_residual <= kUnitarityTol && md.qdim_vs_s_residual <= kQdimTol &&
                  std::isfinite(md.unitarity_residual) && std::isfinite(md.symmetry_residual);
  if (!ok) {
    if (p == Precision::Double) return get_modular_data(rs, level, Precision::Extended);
    std::ostringstream os;
    os << "modular data for " << rs->name() << "_" << level
       << " fails validation at extended precision (unitarity " << md.unitarity_residual
       << ", symmetry " << md.symmetry_residual << ", qdim " << md.qdim_vs_s_residual << ")";
    throw std::runtime_error(os.str());
  }
  for (int i = 0; i < md.num(); ++i)
    if (md.qdim(i) < 1.0 - 1e-9)
      throw std::runtime_error("quantum dimension below 1 in " + rs->name());
  auto ptr = std::make_shared<const ModularData>(std::move(md));
  std::lock_guard<std::mutex> lock(g_md_mutex);
  g_md_cache.emplace(std::make_tuple(rs->name(), level, static_cast<int>(p)), ptr);
  return ptr;
}

std::vector<FusionEntry> fusion_row(const ModularData& md, int i, int j, double* residual) {
  const int n = md.num();
  Eigen::VectorXcd v(n);
  for (int mu = 0; mu < n; ++mu) v(mu) = md.S(i, mu) * md.S(j, mu) / md.S(0, mu);
  Eigen::VectorXcd nv = md.S.conjugate() * v;
  std::vector<FusionEntry> out;
  double worst = 0;
  for (int k = 0; k < n; ++k) {
    const double re = nv(k).real();
    const double rounded = std::round(re);
    worst = std::max(worst, std::abs(re - rounded));
    worst = std::max(worst, std::abs(nv(k).imag()));
    const long long c = static_cast<long long>(rounded);
    if (c != 0) out.push_back({k, c});
  }
  if (residual) *residual = worst;
  if (worst >= kFusionRoundTol)
    throw std::runtime_error("fusion rounding residual " + std::to_string(worst) + " in " +
                             md.rs->name() + "_" + std::to_string(md.level));
  return out;
}

Eigen::MatrixXd fusion_matrix(const ModularData& md, int i, double* residual) {
  const int n = md.num();
  Eigen::VectorXcd d(n);
  for (int mu = 0; mu < n; ++mu) d(mu) = md.S(i, mu) / md.S(0, mu);
  Eigen::MatrixXcd N = md.S * d.asDiagonal() * md.S.adjoint();
  double worst = 0;
  Eigen::MatrixXd out(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double re = N(a, b).real();
      const double rounded = std::round(re);
      worst = std::max(worst, std::abs(re - rounded));
      worst = std::max(worst, std::abs(N(a, b).imag()));
      out(a, b) = rounded;
    }
  if (residual) *residual = worst;
  return out;
}

std::vector<int> simple_currents(const ModularData& md) {
  std::vector<int> out;
  for (int i = 0; i < md.num(); ++i)
    if (std::abs(md.qdim(i) - 1.0) <= kQdimTol) out.push_back(i);
  std::set<int> cs(out.begin(), out.end());
  for (int a : out)
    for (int b : out) {
      auto row = fusion_row(md, a, b);
      if (row.size() != 1 || row[0].coeff != 1 || !cs.count(row[0].index))
        throw std::logic_error("simple currents not closed under fusion");
    }
  return out;
}

int CompoundModular::idx(const ModuleLabel& m) const {
  int i = 0;
  for (size_t c = 0; c < comps.size(); ++c) {
    int stride = 1;
    for (size_t d = c + 1; d < comps.size(); ++d) stride *= comps[d]->num();
    i += comps[c]->idx(m.parts[c]) * stride;
  }
  return i;
}

Rat CompoundModular::h(const ModuleLabel& m) const {
  Rat s;
  for (size_t c = 0; c < comps.size(); ++c) s += comps[c]->h[comps[c]->idx(m.parts[c])];
  return s;
}

double CompoundModular::qdim(const ModuleLabel& m) const {
  double q = 1;
  for (size_t c = 0; c < comps.size(); ++c) q *= comps[c]->qdim(comps[c]->idx(m.parts[c]));
  return q;
}

ModuleLabel CompoundModular::contragredient(const ModuleLabel& m) const {
  ModuleLabel out;
  for (size_t c = 0; c < comps.size(); ++c) out.parts.push_back(comps[c]->rs->star(m.parts[c]));
  return out;
}

std::vector<std::pair<ModuleLabel, long long>> CompoundModular::fuse(const ModuleLabel& a,
                                                                     const ModuleLabel& b) const {
  std::vector<std::pair<ModuleLabel, long long>> acc;
  acc.push_back({ModuleLabel{}, 1});
  for (size_t c = 0; c < comps.size(); ++c) {
    auto rows = fusion_row(*comps[c], comps[c]->idx(a.parts[c]), comps[c]->idx(b.parts[c]));
    std::vector<std::pair<ModuleLabel, long long>> next;
    next.reserve(acc.size() * rows.size());
    for (const auto& [pref, coeff] : acc)
      for (const auto& e : rows) {
        ModuleLabel l = pref;
        l.parts.push_back(comps[c]->labels[e.index]);
        next.push_back({std::move(l), coeff * e.coeff});
      }
    acc = std::move(next);
  }
  return acc;
}

ModuleLabel CompoundModular::fuse_current(const ModuleLabel& cur, const ModuleLabel& m) const {
  auto rows = fuse(cur, m);
  if (rows.size() != 1 || rows[0].second != 1)
    throw std::logic_error("fusion with a non-simple-current label");
  return rows[0].first;
}

std::vector<ModuleLabel> CompoundModular::simple_current_labels() const {
  std::vector<std::vector<int>> per;
  for (const auto& c : comps) per.push_back(simple_currents(*c));
  std::vector<ModuleLabel> out;
  ModuleLabel cur;
  cur.parts.resize(comps.size());
  auto rec = [&](auto&& self, size_t c) -> void {
    if (c == comps.size()) {
      out.push_back(cur);
      return;
    }
    for (int i : per[c]) {
      cur.parts[c] = comps[c]->labels[i];
      self(self, c + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::complex<double> CompoundModular::s_entry(const ModuleLabel& a, const ModuleLabel& b) const {
  std::complex<double> v(1, 0);
  for (size_t c = 0; c < comps.size(); ++c)
    v *= comps[c]->S(comps[c]->idx(a.parts[c]), comps[c]->idx(b.parts[c]));
  return v;
}

CompoundModular get_compound_modular(const AlgebraSpec& spec) {
  return get_compound_modular(spec, default_precision());
}

CompoundModular get_compound_modular(const AlgebraSpec& spec, Precision p) {
  CompoundModular cm;
  cm.spec = spec;
  for (const auto& c : spec.components) cm.comps.push_back(get_modular_data(c.rs, c.level, p));
  cm.labels = level_weights(spec);
  return cm;
}

ModuleLabel contragredient(const AlgebraSpec& spec, const ModuleLabel& m) {
  ModuleLabel out;
  for (size_t c = 0; c < m.parts.size(); ++c)
    out.parts.push_back(spec.components[c].rs->star(m.parts[c]));
  return out;
}

}  // namespace voa

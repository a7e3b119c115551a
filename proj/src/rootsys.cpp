#include "voa/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace voa {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  auto to_ll = [](const std::string& t) {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad rational: " + t);
    return v;
  };
  if (slash == std::string::npos) return Rat(to_ll(s));
  return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
  }
}

unsigned long long weyl_group_order(Family f, int n) {
  auto fact = [](int m) {
    unsigned long long r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
  };
  switch (f) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return fact(n) << n;
    case Family::D: return fact(n) << (n - 1);
    case Family::G: return 12ULL;
    case Family::F: return 1152ULL;
    case Family::E:
      if (n == 6) return 51840ULL;
      if (n == 7) return 2903040ULL;
      return 696729600ULL;
  }
  throw std::logic_error("weyl_group_order");
}

int dual_coxeter_number(Family f, int n) {
  switch (f) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n - 1;
    case Family::C: return n + 1;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F: return 9;
    case Family::G: return 4;
  }
  throw std::logic_error("dual_coxeter_number");
}

long long positive_root_count(Family f, int n) {
  switch (f) {
    case Family::A: return 1LL * n * (n + 1) / 2;
    case Family::B:
    case Family::C: return 1LL * n * n;
    case Family::D: return 1LL * n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw std::logic_error("positive_root_count");
}

namespace {

void check_valid(Family f, int n) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid root system " << static_cast<char>(f) << n
       << " (A: n>=1, B,C: n>=2, D: n>=3, E: 6..8, F: 4, G: 2)";
    throw std::invalid_argument(os.str());
  }
}

RatMat rat_inverse(const RatMat& m) {
  const Eigen::Index n = m.rows();
  RatMat a(n, 2 * n);
  a.setConstant(Rat(0));
  a.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i) a(i, n + i) = Rat(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != c) a.row(p).swap(a.row(c));
    Rat pivot = a(c, c);
    for (Eigen::Index j = 0; j < 2 * n; ++j) a(c, j) /= pivot;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Rat fctr = a(r, c);
      for (Eigen::Index j = 0; j < 2 * n; ++j) a(r, j) -= fctr * a(c, j);
    }
  }
  return a.rightCols(n);
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  check_valid(family, rank);
  build_model();
  build_roots();
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

void RootSystem::build_model() {
  const int n = rank_;
  int dim = n;
  switch (family_) {
    case Family::A: dim = n + 1; break;
    case Family::E: dim = 8; break;
    case Family::G: dim = 3; break;
    default: break;
  }
  form_ = RatMat(dim, dim);
  form_.setConstant(Rat(0));
  Rat diag(1);
  if (family_ == Family::C) diag = Rat(1, 2);
  if (family_ == Family::G) diag = Rat(1, 3);
  for (int i = 0; i < dim; ++i) form_(i, i) = diag;

  simple_coords_ = RatMat(n, dim);
  simple_coords_.setConstant(Rat(0));
  auto chain = [&](int upto) {
    for (int i = 0; i < upto; ++i) {
      simple_coords_(i, i) = Rat(1);
      simple_coords_(i, i + 1) = Rat(-1);
    }
  };
  switch (family_) {
    case Family::A: chain(n); break;
    case Family::B:
      chain(n - 1);
      simple_coords_(n - 1, n - 1) = Rat(1);
      break;
    case Family::C:
      chain(n - 1);
      simple_coords_(n - 1, n - 1) = Rat(2);
      break;
    case Family::D:
      chain(n - 1);
      simple_coords_(n - 1, n - 2) = Rat(1);
      simple_coords_(n - 1, n - 1) = Rat(1);
      break;
    case Family::G:
      simple_coords_(0, 0) = Rat(1);
      simple_coords_(0, 1) = Rat(-1);
      simple_coords_(1, 0) = Rat(-2);
      simple_coords_(1, 1) = Rat(1);
      simple_coords_(1, 2) = Rat(1);
      break;
    case Family::F:
      simple_coords_(0, 1) = Rat(1);
      simple_coords_(0, 2) = Rat(-1);
      simple_coords_(1, 2) = Rat(1);
      simple_coords_(1, 3) = Rat(-1);
      simple_coords_(2, 3) = Rat(1);
      simple_coords_(3, 0) = Rat(1, 2);
      simple_coords_(3, 1) = Rat(-1, 2);
      simple_coords_(3, 2) = Rat(-1, 2);
      simple_coords_(3, 3) = Rat(-1, 2);
      break;
    case Family::E: {
      simple_coords_(0, 0) = Rat(1, 2);
      simple_coords_(0, 7) = Rat(1, 2);
      for (int j = 1; j <= 6; ++j) simple_coords_(0, j) = Rat(-1, 2);
      simple_coords_(1, 0) = Rat(1);
      simple_coords_(1, 1) = Rat(1);
      for (int i = 2; i < n; ++i) {
        simple_coords_(i, i - 2) = Rat(-1);
        simple_coords_(i, i - 1) = Rat(1);
      }
      break;
    }
  }

  auto ip = [&](const RatVec& x, const RatVec& y) { return dot(x, form_, y); };
  cartan_ = RatMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec ai = simple_coords_.row(i).transpose();
      RatVec aj = simple_coords_.row(j).transpose();
      cartan_(i, j) = Rat(2) * ip(ai, aj) / ip(aj, aj);
    }

  RatMat cinv = rat_inverse(cartan_);
  fw_coords_ = cinv * simple_coords_;
  fw_gram_ = RatMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec wi = fw_coords_.row(i).transpose();
      RatVec wj = fw_coords_.row(j).transpose();
      fw_gram_(i, j) = ip(wi, wj);
    }

  rho_ = Weight(n);
  for (int i = 0; i < n; ++i) rho_(i) = Rat(1);
  weyl_order_ = weyl_group_order(family_, rank_);
}

Rat RootSystem::inner(const Weight& x, const Weight& y) const { return dot(x, fw_gram_, y); }

Rat RootSystem::inner(const IntLabels& x, const IntLabels& y) const {
  Rat s;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    Rat row;
    for (int j = 0; j < rank_; ++j)
      if (y[j] != 0) row += fw_gram_(i, j) * Rat(y[j]);
    s += Rat(x[i]) * row;
  }
  return s;
}

Rat RootSystem::inner(const Weight& x, const IntLabels& y) const {
  Rat s;
  for (int i = 0; i < rank_; ++i) {
    Rat row;
    for (int j = 0; j < rank_; ++j)
      if (y[j] != 0) row += fw_gram_(i, j) * Rat(y[j]);
    s += x(i) * row;
  }
  return s;
}

IntLabels RootSystem::reflect(int i, const IntLabels& v) const {
  IntLabels w = v;
  int vi = v[i];
  if (vi == 0) return w;
  for (int j = 0; j < rank_; ++j) w[j] -= vi * static_cast<int>(cartan_(i, j).as_int());
  return w;
}

Weight RootSystem::reflect(int i, const Weight& v) const {
  Weight w = v;
  Rat vi = v(i);
  if (vi.is_zero()) return w;
  for (int j = 0; j < rank_; ++j) w(j) -= vi * cartan_(i, j);
  return w;
}

IntLabels RootSystem::dominate(const IntLabels& v) const {
  IntLabels w = v;
  for (;;) {
    int i = 0;
    for (; i < rank_; ++i)
      if (w[i] < 0) break;
    if (i == rank_) return w;
    int vi = w[i];
    for (int j = 0; j < rank_; ++j) w[j] -= vi * static_cast<int>(cartan_(i, j).as_int());
  }
}

Weight RootSystem::dominate(const Weight& v) const {
  Weight w = v;
  for (;;) {
    int i = 0;
    for (; i < rank_; ++i)
      if (w(i) < Rat(0)) break;
    if (i == rank_) return w;
    w = reflect(i, w);
  }
}

IntLabels RootSystem::star(const IntLabels& v) const {
  IntLabels neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  return dominate(neg);
}

bool RootSystem::is_dominant(const IntLabels& v) const {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

Weight RootSystem::to_weight(const IntLabels& v) const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w(i) = Rat(v[i]);
  return w;
}

IntLabels RootSystem::to_labels(const Weight& v) {
  IntLabels out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = static_cast<int>(v(i).as_int());
  return out;
}

void RootSystem::build_roots() {
  const int n = rank_;
  // closure under simple reflections, in the label basis
  std::set<IntLabels> all;
  std::vector<IntLabels> frontier;
  for (int i = 0; i < n; ++i) {
    IntLabels ai(n);
    for (int j = 0; j < n; ++j) ai[j] = static_cast<int>(cartan_(i, j).as_int());
    if (all.insert(ai).second) frontier.push_back(ai);
  }
  while (!frontier.empty()) {
    std::vector<IntLabels> next;
    for (const auto& v : frontier)
      for (int i = 0; i < n; ++i) {
        IntLabels w = reflect(i, v);
        if (all.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  // positivity via root-basis coordinates: solve C^T x = v
  ct_inv_ = rat_inverse(RatMat(cartan_.transpose()));
  auto root_coord_sum = [&](const IntLabels& v) {
    Rat s;
    for (int i = 0; i < n; ++i) {
      Rat xi;
      for (int j = 0; j < n; ++j) xi += ct_inv_(i, j) * Rat(v[j]);
      s += xi;
    }
    return s;
  };
  for (const auto& v : all)
    if (root_coord_sum(v) > Rat(0)) {
      posroots_.push_back(v);
      posroot_norms_.push_back(inner(v, v));
    }
  if (static_cast<long long>(posroots_.size()) != positive_root_count(family_, rank_))
    throw std::logic_error("positive root count mismatch for " + name());

  for (size_t i = 0; i < posroots_.size(); ++i) {
    if (!(posroot_norms_[i] == Rat(2))) continue;
    if (is_dominant(posroots_[i])) theta_ = posroots_[i];
  }
  if (theta_.empty()) throw std::logic_error("highest root not found");

  comarks_.resize(n);
  for (int i = 0; i < n; ++i) {
    IntLabels ei(n, 0);
    ei[i] = 1;
    comarks_[i] = static_cast<int>(inner(ei, theta_).as_int());
  }
  Rat rt = inner(rho_, theta_);
  dual_coxeter_ = static_cast<int>((rt + Rat(1)).as_int());
  if (dual_coxeter_ != dual_coxeter_number(family_, rank_))
    throw std::logic_error("dual Coxeter mismatch for " + name());

  // integer-scaled Gram for hot loops
  long long den = 1;
  auto lcm_ll = [](long long a, long long b) { return a / std::gcd(a, b) * b; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den = lcm_ll(den, static_cast<long long>(fw_gram_(i, j).den()));
  gram_den_ = den;
  gram_num_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram_num_[i][j] = static_cast<long long>((fw_gram_(i, j) * Rat(den)).as_int());
}

RatVec RootSystem::root_coords(const IntLabels& v) const {
  RatVec x(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rat xi;
    for (int j = 0; j < rank_; ++j) xi += ct_inv_(i, j) * Rat(v[j]);
    x(i) = xi;
  }
  return x;
}

long long RootSystem::pair_scaled(const IntLabels& x, const IntLabels& y) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < rank_; ++j) row += gram_num_[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

unsigned long long RootSystem::orbit_size(const IntLabels& dom) const {
  std::vector<int> zeros;
  for (int i = 0; i < rank_; ++i)
    if (dom[i] == 0) zeros.push_back(i);
  // stabilizer = parabolic generated by the zero nodes
  unsigned long long stab = 1;
  std::vector<char> seen(zeros.size(), 0);
  for (size_t s = 0; s < zeros.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{zeros[s]};
    seen[s] = 1;
    std::vector<int> stack{zeros[s]};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (size_t t = 0; t < zeros.size(); ++t) {
        if (seen[t] || cartan_(x, zeros[t]).is_zero()) continue;
        seen[t] = 1;
        comp.push_back(zeros[t]);
        stack.push_back(zeros[t]);
      }
    }
    // identify the sub-diagram type via its Cartan matrix
    RatMat sub(comp.size(), comp.size());
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = 0; j < comp.size(); ++j) sub(i, j) = cartan_(comp[i], comp[j]);
    auto [fam, rk] = identify_cartan_type(sub);
    stab *= weyl_group_order(fam, rk);
  }
  return weyl_order_ / stab;
}

std::pair<Family, int> identify_cartan_type(const RatMat& c) {
  const int k = static_cast<int>(c.rows());
  if (k == 1) return {Family::A, 1};
  int triple = 0, dbl = 0, singles = 0;
  std::vector<int> deg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (c(i, j).is_zero()) continue;
      long long p = (c(i, j) * c(j, i)).as_int();
      deg[i]++;
      deg[j]++;
      if (p == 3) ++triple;
      else if (p == 2) ++dbl;
      else ++singles;
    }
  int nedges = triple + dbl + singles;
  if (nedges != k - 1) throw std::domain_error("not an irreducible Cartan matrix");
  if (triple) return {Family::G, 2};
  int maxdeg = *std::max_element(deg.begin(), deg.end());
  if (dbl) {
    if (k == 2) return {Family::C, 2};  // B2 = C2; canonical letter C
    if (k == 4) {
      // F4 iff the double bond joins two degree-2 nodes
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (!c(i, j).is_zero() && (c(i, j) * c(j, i)).as_int() == 2 && deg[i] == 2 && deg[j] == 2)
            return {Family::F, 4};
    }
    // B has one short simple root (row with |c_ij|=2 toward it), C has one long.
    // In C_n exactly one simple root a satisfies c(a,b) = -2 for a neighbor b;
    // that root is the long end. In B_n the -2 points at the short end node.
    // Distinguish by counting rows containing a -2 entry off-diagonal:
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j || c(i, j).is_zero()) continue;
        if (c(i, j).as_int() == -2) {
          // c(i,j) = 2(ai|aj)/(aj|aj) = -2 means aj is short, ai long.
          // Long end of degree 1 adjacent to the double bond: C if the long
          // root is a leaf whose removal leaves an A-chain of short roots.
          // Count long roots = rows never appearing as the "short" column.
          std::vector<char> shortish(k, 0);
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
              if (a != b && !c(a, b).is_zero() && c(a, b).as_int() == -2) shortish[b] = 1;
          int nshort = 0;
          for (char s : shortish) nshort += s;
          // B_n: the lone short root is the end node -> nshort == 1
          // C_n: all chain nodes are short -> nshort == k-1
          if (nshort == 1) return {Family::B, k};
          return {Family::C, k};
        }
      }
    throw std::domain_error("unrecognized doubly-laced diagram");
  }
  // simply laced
  if (maxdeg <= 2) return {Family::A, k};
  if (maxdeg > 3) throw std::domain_error("diagram degree > 3");
  // branch node arms
  int b = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
  std::vector<int> arms;
  for (int j = 0; j < k; ++j) {
    if (j == b || c(b, j).is_zero()) continue;
    int len = 1, prev = b, cur = j;
    for (;;) {
      int nxt = -1;
      for (int x = 0; x < k; ++x)
        if (x != prev && x != cur && !c(cur, x).is_zero()) nxt = x;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::domain_error("bad branch");
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, k};
  if (arms[0] == 1 && arms[1] == 2 && k >= 6 && k <= 8) return {Family::E, k};
  throw std::domain_error("unrecognized simply-laced diagram");
}

std::vector<Weight> weyl_orbit(const Weight& v, const RootSystem& rs) {
  auto key = [&](const Weight& w) {
    std::string s;
    for (Eigen::Index i = 0; i < w.size(); ++i) s += w(i).str() + ",";
    return s;
  };
  std::map<std::string, Weight> seen;
  std::vector<Weight> frontier{v};
  seen.emplace(key(v), v);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& x : frontier)
      for (int i = 0; i < rs.rank(); ++i) {
        Weight y = rs.reflect(i, x);
        auto k = key(y);
        if (!seen.count(k)) {
          seen.emplace(k, y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (auto& [k, w] : seen) out.push_back(w);
  return out;
}

std::vector<SubsystemComponent> classify_subsystem(const std::vector<IntLabels>& roots,
                                                   const RootSystem& rs) {
  if (roots.empty()) return {};
  std::set<IntLabels> rset(roots.begin(), roots.end());
  // closed under negation and pairwise reflection
  for (const auto& x : roots) {
    IntLabels neg(x.size());
    for (size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    if (!rset.count(neg)) throw std::domain_error("root set not closed under negation");
  }
  for (const auto& x : roots) {
    Rat xx = rs.inner(x, x);
    for (const auto& y : roots) {
      Rat c = Rat(2) * rs.inner(x, y) / xx;
      if (!c.is_integer()) throw std::domain_error("not a root subsystem (non-integral pairing)");
      IntLabels refl(y.size());
      for (size_t i = 0; i < y.size(); ++i)
        refl[i] = y[i] - static_cast<int>(c.as_int()) * x[i];
      if (!rset.count(refl)) throw std::domain_error("not a root subsystem (reflection escapes)");
    }
  }
  // lexicographic positivity: (rho|x) first, labels as tiebreak
  auto positive = [&](const IntLabels& x) {
    Rat r = rs.inner(rs.rho(), x);
    if (!(r == Rat(0))) return r > Rat(0);
    for (int v : x) {
      if (v > 0) return true;
      if (v < 0) return false;
    }
    return false;
  };
  std::vector<IntLabels> pos;
  for (const auto& x : roots)
    if (positive(x)) pos.push_back(x);
  std::set<IntLabels> pset(pos.begin(), pos.end());
  std::vector<IntLabels> base;
  for (const auto& x : pos) {
    bool decomposable = false;
    for (const auto& y : pos) {
      IntLabels z(x.size());
      for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
      if (z == y || !pset.count(z)) continue;
      decomposable = true;
      break;
    }
    if (!decomposable) base.push_back(x);
  }
  std::sort(base.begin(), base.end());
  // split into connected components
  const int nb = static_cast<int>(base.size());
  std::vector<char> seen(nb, 0);
  std::vector<SubsystemComponent> comps;
  for (int s = 0; s < nb; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int t = 0; t < nb; ++t)
        if (!seen[t] && !rs.inner(base[x], base[t]).is_zero()) {
          seen[t] = 1;
          comp.push_back(t);
          stack.push_back(t);
        }
    }
    RatMat sub(comp.size(), comp.size());
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = 0; j < comp.size(); ++j)
        sub(i, j) = Rat(2) * rs.inner(base[comp[i]], base[comp[j]]) /
                    rs.inner(base[comp[j]], base[comp[j]]);
    auto [fam, rk] = identify_cartan_type(sub);
    SubsystemComponent sc;
    sc.family = fam;
    sc.rank = rk;
    for (int i : comp) sc.base.push_back(base[i]);
    // component theta norm: generate the component's roots, take max norm
    std::set<IntLabels> cr(sc.base.begin(), sc.base.end());
    std::vector<IntLabels> frontier(sc.base.begin(), sc.base.end());
    Rat maxn;
    while (!frontier.empty()) {
      std::vector<IntLabels> next;
      for (const auto& v : frontier) {
        Rat nv = rs.inner(v, v);
        if (nv > maxn) maxn = nv;
        for (const auto& a : sc.base) {
          Rat c = Rat(2) * rs.inner(v, a) / rs.inner(a, a);
          IntLabels w(v.size());
          for (size_t i = 0; i < v.size(); ++i)
            w[i] = v[i] - static_cast<int>(c.as_int()) * a[i];
          if (cr.insert(w).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    sc.theta_norm = maxn;
    comps.push_back(std::move(sc));
  }
  std::sort(comps.begin(), comps.end(), [](const SubsystemComponent& a, const SubsystemComponent& b) {
    if (a.family != b.family) return static_cast<char>(a.family) < static_cast<char>(b.family);
    if (a.rank != b.rank) return a.rank > b.rank;
    if (!(a.theta_norm == b.theta_norm)) return a.theta_norm < b.theta_norm;
    return a.base < b.base;
  });
  return comps;
}

namespace {
std::mutex g_rs_mutex;
std::map<std::pair<char, int>, RootSystemPtr> g_rs_cache;
}  // namespace

RootSystemPtr get_root_system(Family family, int rank) {
  std::lock_guard<std::mutex> lock(g_rs_mutex);
  auto key = std::make_pair(static_cast<char>(family), rank);
  auto it = g_rs_cache.find(key);
  if (it != g_rs_cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(family, rank);
  g_rs_cache.emplace(key, rs);
  return rs;
}

RootSystemPtr get_root_system(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad root system name: " + name);
  Family f = family_from_char(name[0]);
  int rank = std::stoi(name.substr(1));
  return get_root_system(f, rank);
}

}  // namespace voa

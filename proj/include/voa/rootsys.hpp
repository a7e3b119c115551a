#pragma once

#include <memory>
#include <string>
#include <vector>

#include "voa/rational.hpp"

namespace voa {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

// Dynkin labels in the fundamental-weight basis. Integral weights have
// integer entries; twist vectors may be rational.
using Weight = RatVec;

using IntLabels = std::vector<int>;

// Finite irreducible root system with the invariant form scaled so long roots
// have squared length 2. Simple roots follow the labeling of Humphreys 11.4
// (Bourbaki order; for C_n the last node is long, for B_n short).
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  const RatMat& cartan() const { return cartan_; }          // C(i,j) = 2(ai|aj)/(aj|aj)
  const RatMat& fw_gram() const { return fw_gram_; }        // (Li|Lj)
  const RatMat& simple_coords() const { return simple_coords_; }
  const RatMat& form() const { return form_; }              // on the coordinate model
  const std::vector<IntLabels>& positive_roots() const { return posroots_; }
  const IntLabels& theta() const { return theta_; }         // highest (long) root
  const std::vector<Rat>& posroot_norms() const { return posroot_norms_; }
  int dual_coxeter() const { return dual_coxeter_; }
  const std::vector<int>& comarks() const { return comarks_; }  // (Li|theta), integers
  unsigned long long weyl_order() const { return weyl_order_; }
  const Weight& rho() const { return rho_; }

  Rat inner(const Weight& x, const Weight& y) const;
  Rat inner(const IntLabels& x, const IntLabels& y) const;
  Rat inner(const Weight& x, const IntLabels& y) const;

  // i-th simple reflection in the label basis
  IntLabels reflect(int i, const IntLabels& v) const;
  Weight reflect(int i, const Weight& v) const;

  // dominant representative of the Weyl orbit
  IntLabels dominate(const IntLabels& v) const;
  Weight dominate(const Weight& v) const;

  // -w0 . v : label of the contragredient weight
  IntLabels star(const IntLabels& v) const;

  unsigned long long orbit_size(const IntLabels& dominant) const;

  bool is_dominant(const IntLabels& v) const;

  Weight to_weight(const IntLabels& v) const;
  static IntLabels to_labels(const Weight& v);  // requires integer entries

  // coefficients of a label vector in the simple-root basis
  RatVec root_coords(const IntLabels& v) const;

  // scaled integer form: gram_num()[i][j] = gram_den() * (Li|Lj)
  const std::vector<std::vector<long long>>& gram_num() const { return gram_num_; }
  long long gram_den() const { return gram_den_; }
  long long pair_scaled(const IntLabels& x, const IntLabels& y) const;

 private:
  void build_model();
  void build_roots();

  Family family_;
  int rank_;
  RatMat form_;           // bilinear form on the coordinate model
  RatMat simple_coords_;  // rank x dimE
  RatMat fw_coords_;      // rank x dimE
  RatMat cartan_;
  RatMat fw_gram_;
  std::vector<IntLabels> posroots_;
  std::vector<Rat> posroot_norms_;
  IntLabels theta_;
  std::vector<int> comarks_;
  int dual_coxeter_ = 0;
  unsigned long long weyl_order_ = 0;
  Weight rho_;
  RatMat ct_inv_;  // inverse of cartan^T, for root-basis coordinates
  std::vector<std::vector<long long>> gram_num_;
  long long gram_den_ = 1;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// cached, immutable
RootSystemPtr get_root_system(Family family, int rank);
RootSystemPtr get_root_system(const std::string& name);  // "D7", "G2"

unsigned long long weyl_group_order(Family family, int rank);
int dual_coxeter_number(Family family, int rank);
long long positive_root_count(Family family, int rank);

// full Weyl orbit of a (possibly rational) weight
std::vector<Weight> weyl_orbit(const Weight& v, const RootSystem& rs);

// (family, rank) of an irreducible Cartan matrix; rank-2 doubly-laced
// diagrams report as C2.
std::pair<Family, int> identify_cartan_type(const RatMat& c);

struct SubsystemComponent {
  Family family;
  int rank;
  std::vector<IntLabels> base;  // simple roots, ambient labels
  Rat theta_norm;               // ambient norm of the component's highest root
};

// Decompose a negation-closed root subsystem into irreducible components.
// Positivity is lexicographic on ((rho|x), labels); the base is the set of
// indecomposable positive elements. Components sort by (family, rank desc).
std::vector<SubsystemComponent> classify_subsystem(const std::vector<IntLabels>& roots,
                                                   const RootSystem& rs);

}  // namespace voa

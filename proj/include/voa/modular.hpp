#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "voa/repdata.hpp"

namespace voa {

enum class Precision { Double, Extended };

// Modular data of one simple affine VOA at a level: level-k labels, S-matrix
// from the Weyl-group alternating sum at denominator k + h_dual, conformal
// weights, quantum dimensions.
struct ModularData {
  RootSystemPtr rs;
  int level = 0;
  std::vector<IntLabels> labels;  // lex ascending; index 0 is the vacuum
  Eigen::MatrixXcd S;
  std::vector<Rat> h;
  Eigen::VectorXd qdim;  // sine-product values
  std::vector<int> conjugation;  // permutation with S^2 = P
  double unitarity_residual = 0;
  double symmetry_residual = 0;
  double qdim_vs_s_residual = 0;
  Precision precision = Precision::Double;

  int num() const { return static_cast<int>(labels.size()); }
  int idx(const IntLabels& l) const;
};

using ModularDataPtr = std::shared_ptr<const ModularData>;

// Cached accessor; builds in double precision (or VOA_PRECISION), escalates
// to extended precision if any residual exceeds tolerance, errors if the
// extended pass still fails.
ModularDataPtr get_modular_data(const RootSystemPtr& rs, int level);
ModularDataPtr get_modular_data(const RootSystemPtr& rs, int level, Precision p);

constexpr double kUnitarityTol = 1e-8;
constexpr double kFusionRoundTol = 1e-6;
constexpr double kQdimTol = 1e-8;

// sine-product quantum dimension (no S-matrix required)
double qdim_component(const RootSystem& rs, int level, const IntLabels& lambda);

struct FusionEntry {
  int index;
  long long coeff;
};

// one Verlinde product; records the worst pre-rounding residual
std::vector<FusionEntry> fusion_row(const ModularData& md, int i, int j, double* residual = nullptr);

// all products i x * as a dense integer-rounded matrix (j, k) -> N_{ij}^k
Eigen::MatrixXd fusion_matrix(const ModularData& md, int i, double* residual = nullptr);

// indices of the simple currents (qdim 1), fusion-closed
std::vector<int> simple_currents(const ModularData& md);

// tensor product of simple factors; labels ordered with component 0 most
// significant, componentwise modular data
struct CompoundModular {
  AlgebraSpec spec;
  std::vector<ModularDataPtr> comps;
  std::vector<ModuleLabel> labels;

  int num() const { return static_cast<int>(labels.size()); }
  int idx(const ModuleLabel& m) const;
  Rat h(const ModuleLabel& m) const;
  double qdim(const ModuleLabel& m) const;
  ModuleLabel contragredient(const ModuleLabel& m) const;
  // componentwise Verlinde product
  std::vector<std::pair<ModuleLabel, long long>> fuse(const ModuleLabel& a,
                                                      const ModuleLabel& b) const;
  // product with a simple current: single output label
  ModuleLabel fuse_current(const ModuleLabel& cur, const ModuleLabel& m) const;
  std::vector<ModuleLabel> simple_current_labels() const;
  std::complex<double> s_entry(const ModuleLabel& a, const ModuleLabel& b) const;
};

CompoundModular get_compound_modular(const AlgebraSpec& spec);
CompoundModular get_compound_modular(const AlgebraSpec& spec, Precision p);

ModuleLabel contragredient(const AlgebraSpec& spec, const ModuleLabel& m);

}  // namespace voa

#pragma once

#include <optional>

#include "voa/innerauto.hpp"
#include "voa/quadratic.hpp"

namespace voa {

struct SchellekensReport {
  bool ok = false;
  struct Ideal {
    std::string name;
    Rat lhs;  // h_dual / k
    Rat rhs;  // (dim V1 - 24) / 24
    bool ok;
  };
  std::vector<Ideal> ideals;
  bool dim_consistent = false;
};

// h_dual/k = (dim V1 - 24)/24 for every simple ideal, and the ideal
// dimensions (plus a declared abelian rank) must add up to dim V1.
SchellekensReport schellekens_check(const AlgebraSpec& spec, long long dim_v1,
                                    int abelian_rank = 0);

struct ConditionICertificate {
  bool certified = false;
  long long order = 0;
  Rat min_twisted_cw;
  std::string failure;
  long long candidate_count = 0;  // integral cw >= 2 labels
  long long dim_twisted_half = -1;  // 0 once certified
};

// Order-2 check on {vacuum} + all integral-cw>=2 labels, all twisted weights
// in (1/2)Z_{>0}; a minimum >= 1 certifies dim V(g)_{1/2} = 0.
ConditionICertificate condition_I_certificate(const AlgebraSpec& spec, const TwistVector& u);

// 3a - b - c + 24
long long orbifold_dim_v1(long long dim_fixed_v1, long long dim_twisted_half, long long dim_v1);

struct OrbifoldReport {
  long long dim_v1 = 0;
  long long dim_fixed_v1 = 0;
  long long dim_twisted_half = 0;
  bool condition_I = false;
  long long dim_tilde_v1 = 0;
};

struct Table6Case {
  std::string algebra;   // spec grammar
  std::string u;         // twist grammar
};

// the six orbifold constructions, in table order
const std::vector<Table6Case>& table6_cases();

struct Table6Row {
  std::string algebra;
  long long dim_v1;
  std::string u;
  Rat norm;
  std::string fixed_type;
  long long fixed_dim;
  bool condition_I;
  long long dim_tilde_v1;
};

Table6Row run_table6_case(const Table6Case& c);

// Non-negative integer multiplicity system for the weight-2 module content
// of a holomorphic VOA with prescribed dim V1 / dim V2: second-moment probe
// rows plus the dimension row.
struct MultiplicitySystem {
  AlgebraSpec spec;
  std::vector<ModuleLabel> candidates;       // conformal weight exactly 2
  std::vector<std::vector<Rat>> probe_coeff;  // per probe, per candidate
  std::vector<Rat> probe_rhs;                 // vacuum part already subtracted
  std::vector<long long> dims;                // top-level dimensions
  long long dim_rhs = 0;                      // dim V2 minus vacuum depth-2
  long long vacuum_depth2 = 0;
};

// probes are (component index, root labels); the S^2 identity fixes the rhs
MultiplicitySystem build_multiplicity_system(const AlgebraSpec& spec, long long dim_v1,
                                             long long dim_v2,
                                             const std::vector<std::pair<int, IntLabels>>& probes);

struct MultiplicitySolution {
  std::vector<std::vector<long long>> solutions;
  bool unique() const { return solutions.size() == 1; }
};

MultiplicitySolution solve_multiplicities(const MultiplicitySystem& sys);

struct MirrorRow {
  IntLabels a;       // A3 level 8 label
  IntLabels psi_a;   // A7 level 4 label
  Rat cw;            // declared conformal weight of L_{A3}(8,a)
  long long dim1;    // declared weight-1 dimension
  bool qdim_ok, cw_ok, dim1_ok;
  double qdim_a, qdim_psi;
};

// Checks each pair: equal quantum dimensions across the mirror, declared
// conformal weight, and the weight-one dimension rule (dim g for the vacuum,
// the top dimension at cw 1, zero above).
std::vector<MirrorRow> mirror_consistency(
    const std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>>& pairs);

// bundled Table-4 pair list (a, psi(a), cw, dim1), one per line in the data file
std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>> builtin_mirror_pairs();
std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>> load_mirror_pairs(
    const std::string& path);

}  // namespace voa

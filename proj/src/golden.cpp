#include "voa/golden.hpp"

#include <filesystem>
#include <fstream>

namespace voa {

Table table6_table() {
  Table t;
  t.header = {"algebra", "dimV1", "u", "norm", "fixed", "dimFixed", "conditionI", "dimTildeV1"};
  for (const auto& c : table6_cases()) {
    auto row = run_table6_case(c);
    TableRow r;
    r.cells = {row.algebra,
               Rat(row.dim_v1),
               row.u,
               row.norm,
               row.fixed_type,
               Rat(row.fixed_dim),
               std::string(row.condition_I ? "yes" : "no"),
               Rat(row.dim_tilde_v1)};
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table extension_table(const std::string& base_spec, const std::string& generator,
                      bool untwisted_only) {
  AlgebraSpec spec = parse_algebra_spec(base_spec);
  ModuleLabel gen = parse_label(generator, spec);
  auto ext = build_extension(spec, gen);
  auto mods = classify_extension_modules(ext, untwisted_only);
  Table t;
  t.header = {"module", "branching", "h", "qdim", "qdim2"};
  for (const auto& m : mods) {
    std::string name = label_str(m.orbit[0]);
    if (m.stabilizer_order > 1) name += "^" + std::to_string(m.character_index);
    if (!m.untwisted) name += " (twisted sector)";
    std::string branch;
    for (size_t i = 0; i < m.orbit.size(); ++i) {
      if (i) branch += "+";
      branch += label_str(m.orbit[i]);
    }
    TableRow r;
    r.cells = {name, branch, m.conformal_weight, m.qdim_ext, m.qdim_ext * m.qdim_ext};
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table census_table(const Table6Case& c) {
  AlgebraSpec spec = parse_algebra_spec(c.algebra);
  TwistVector u = parse_twist(c.u, spec);
  Table t;
  t.header = {"label", "h", "(u|L)", "twisted_h"};
  for (const auto& m : integral_cw2_census(spec)) {
    auto rep = twist_report(spec, m, u);
    TableRow r;
    r.cells = {label_str(m), rep.conformal_weight, rep.pairing, rep.twisted_cw};
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table mirror_table() { return mirror_table_from(builtin_mirror_pairs()); }

Table mirror_table_from(
    const std::vector<std::tuple<IntLabels, IntLabels, Rat, long long>>& pairs) {
  Table t;
  t.header = {"a", "psi_a", "h", "dim1", "qdimA3", "qdimA7", "ok"};
  for (const auto& row : mirror_consistency(pairs)) {
    auto lab = [](const IntLabels& l) {
      std::string s = "[";
      for (size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
      return s + "]";
    };
    TableRow r;
    r.cells = {lab(row.a),
               lab(row.psi_a),
               row.cw,
               Rat(row.dim1),
               row.qdim_a,
               row.qdim_psi,
               std::string(row.qdim_ok && row.cw_ok && row.dim1_ok ? "yes" : "no")};
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table multiplicities_table() {
  AlgebraSpec spec = parse_algebra_spec("C5_3+G2_2+A1_1");
  // probes: the A1 root, a long G2 root, plus one C5 root for overdetermination
  std::vector<std::pair<int, IntLabels>> probes = {
      {2, {2}}, {1, {-3, 2}}, {0, {2, -1, 0, 0, 0}}};
  auto sys = build_multiplicity_system(spec, 72, 196884, probes);
  auto sol = solve_multiplicities(sys);
  Table t;
  t.header = {"label", "top_dim", "multiplicity"};
  for (size_t i = 0; i < sys.candidates.size(); ++i) {
    TableRow r;
    r.cells = {label_str(sys.candidates[i]), Rat(sys.dims[i]),
               sol.unique() ? Rat(sol.solutions[0][i]) : Rat(-1)};
    t.rows.push_back(std::move(r));
  }
  TableRow meta;
  meta.cells = {std::string("#solutions"), Rat(static_cast<long long>(sol.solutions.size())),
                Rat(sys.vacuum_depth2)};
  t.rows.push_back(std::move(meta));
  return t;
}

std::vector<std::string> write_golden_all(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const Table& t) {
    std::ofstream out(dir + "/" + name);
    out << t.tsv();
    written.push_back(name);
  };
  emit("table6.tsv", table6_table());
  emit("table1.tsv", extension_table("E6_3", "[3,0,0,0,0,0]", true));
  emit("table2.tsv", extension_table("A4_5", "[5,0,0,0]", true));
  emit("table4.tsv", mirror_table());
  const char* names[] = {"tableA1.tsv", "tableA2.tsv", "tableA3.tsv", "tableA4.tsv",
                         "tableA5.tsv"};
  int ai = 0;
  for (size_t i = 0; i < table6_cases().size(); ++i) {
    const auto& c = table6_cases()[i];
    if (c.algebra == "A5_6+C2_3+A1_2") {
      emit("censusA5_6C2_3A1_2.tsv", census_table(c));
      continue;
    }
    emit(names[ai++], census_table(c));
  }
  emit("multiplicities.tsv", multiplicities_table());
  return written;
}

}  // namespace voa

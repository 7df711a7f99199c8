#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordcalc/abgroup.hpp"
#include "ordcalc/ahss.hpp"
#include "ordcalc/group.hpp"
#include "ordcalc/superalgebra.hpp"

namespace ordcalc {

inline constexpr int kSchemaVersion = 1;

enum class Statistics { Bosonic, Fermionic };
std::string to_string(Statistics s);
Statistics parse_statistics(const std::string& s);

struct Symmetry {
  FiniteGroup group;
  std::optional<TimeReversalTag> time_reversal;
};

struct AnomalyReport {
  bool present = false;   // a symmetry was supplied
  AbGroupExpr target;     // group the anomaly lives in
  AbGroupExpr image;      // image of the connecting map
  bool nonzero = false;
  std::string description;
};

struct ClassifyResponse {
  std::string dimension;
  Statistics statistics = Statistics::Bosonic;
  std::optional<AbGroupExpr> group;
  std::optional<std::int64_t> class_count;
  std::vector<GradedPiece> associated_graded;
  std::vector<std::string> representatives;
  AnomalyReport anomaly;
  std::vector<std::string> ambiguity;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, int>> truncations;  // provenance
};

// (0+1)d: central simple (super)algebras.
struct AlgebraClass {
  int size = 0;  // matrix size k, or 0 when the class does not depend on it
  BrauerClass cls;
  std::string representative;
};
struct ZeroOneResult {
  Statistics statistics;
  bool time_reversal = false;
  std::vector<AlgebraClass> classes;
  int count_for_size(int k) const;
};
// `time_reversal` selects the Z2^T case; sizes 1..max_size are enumerated there.
ZeroOneResult classify_0_1(Statistics s, bool time_reversal, int max_size = 4);

ClassifyResponse classify_1_1(Statistics s, const Symmetry& sym, const GSet& x);

// Fermionic: reduced degree-4 sW cohomology of the groupoid.  Bosonic: one
// supergroup per component.
ClassifyResponse classify_3_1_fermionic(const FiniteGroupoid& target);
ClassifyResponse classify_3_1_bosonic(const std::vector<SuperGroup>& components);

// Regenerated tables compared with the golden files.
struct TableDiff {
  std::string where, expected, got;
};
struct TableResult {
  std::string name;
  std::string text;
  std::vector<std::vector<std::string>> rows;  // generated, as in the golden file
  bool match = false;
  std::vector<TableDiff> diffs;
  std::string golden_path;
};
const std::vector<std::string>& paper_table_names();
std::vector<std::vector<std::string>> generate_table(const std::string& which);
TableResult paper_tables(const std::string& which, const std::string& golden_dir = ORDCALC_DATA_DIR "/golden");
// "⋯" in the golden file matches anything
bool cell_matches(const std::string& golden, const std::string& got);

}  // namespace ordcalc

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/abgroup.hpp"
#include "ordcalc/cochain.hpp"
#include "ordcalc/cohomology.hpp"
#include "ordcalc/lattice.hpp"

namespace ordcalc {

// One homotopy group pi_{-q} of a bounded spectrum.
enum class LayerKind { Zero, Z2, Cstar, Symbol };
struct Layer {
  int q = 0;
  LayerKind kind = LayerKind::Zero;
  std::string symbol;  // for LayerKind::Symbol
  AbGroupExpr homotopy() const;
};

// Sq2: Z2 -> Z2, x -> Sq^2 x (+ w x).  SignSq2: Z2 -> C^x, the sign of the same.
// Symbolic: a named map that is not evaluated (its vanishing is left open).
enum class RuleOp { Sq2, SignSq2, Symbolic };
struct Rule {
  int r = 2;
  int from_q = 0, to_q = 0;
  RuleOp op = RuleOp::Sq2;
  bool twisted = false;
  std::string name;
  std::string meaning;  // attached to conditional outputs
};

struct SpectrumDescriptor {
  std::string name;
  std::vector<Layer> layers;  // contiguous q window, ascending
  std::vector<Rule> rules;
  bool higher_unknown = true;  // d_r, r >= 3, other than named rules

  int min_q() const { return layers.front().q; }
  int max_q() const { return layers.back().q; }
  const Layer* layer(int q) const;
  const Rule* rule(int r, int from_q) const;
  void validate() const;  // ConfigurationError
};

// C^x, Z2, Z2 with untwisted Sq2 and (-1)^Sq2.
SpectrumDescriptor sh_spectrum();
// sW, 0, Z2, Z2, C^x with Sq2 + w, (-1)^(Sq2 + w) and the symbolic d5 from sW to C^x.
SpectrumDescriptor sw_spectrum();
// C^x only (bosonic).
SpectrumDescriptor w_spectrum();

// Base of the spectral sequence: a truncated simplicial set, optionally a pair
// (cochains vanishing on a subcomplex), optionally with a Z2 twist 2-cocycle.
struct AhssBase {
  SimplicialComplexTrunc cx;
  std::shared_ptr<const SubcomplexMask> relative;
  std::optional<Cochain> twist;
  std::string name;
};

struct Cell {
  enum class State { Known, Unknown };
  State state = State::Known;
  AbGroupExpr group;
  bool symbolic = false;
  // concrete E2 data
  std::shared_ptr<const CohomologyResult> h;
  Orders orders;
  // later pages: subquotient of the E2 group, in E2 coordinates
  Vectors kernel, image;

  bool maybe_nonzero() const { return state == State::Unknown || !group.is_zero(); }
  std::string render() const { return state == State::Unknown ? "⋯" : group.cell(); }
};

struct Arrow {
  int r = 2;
  int p = 0, q = 0, tp = 0, tq = 0;
  bool nonzero = false;
  std::string rule;
};

struct Page {
  int r = 2;
  int pmax = 0;
  int min_q = 0, max_q = 0;
  std::map<std::pair<int, int>, Cell> cells;
  std::vector<Arrow> arrows;  // differentials d_r leaving this page
  std::vector<std::string> assumptions;

  const Cell& at(int p, int q) const;
  bool has(int p, int q) const { return cells.count({p, q}) > 0; }
};

// E2 through column pmax; needs base truncation >= pmax + 1.
Page e2(const AhssBase& base, const SpectrumDescriptor& spec, int pmax);
// E3 from E2 using the d2 rules; differentials into column pmax+1 are decided by
// membership tests, beyond that the source cell becomes unknown.
Page turn_page(const Page& page, const AhssBase& base, const SpectrumDescriptor& spec);

struct GradedPiece {
  int p = 0, q = 0;
  AbGroupExpr group;
  std::string note;
};
struct Scenario {
  std::string condition;
  AbGroupExpr group;
};
struct SHResult {
  int degree = 0;
  std::optional<AbGroupExpr> group;  // set only when nothing is ambiguous
  std::vector<GradedPiece> associated_graded;
  std::vector<std::string> ambiguity;
  std::vector<std::string> assumptions;
  std::vector<Scenario> conditional;
  std::optional<std::int64_t> finite_order;  // product of the concrete layer orders
  bool truncated = false;                    // a needed cell was outside the window
};

// Total degree n from the E3 page; d_r (r >= 3) are flagged, named symbolic
// rules give conditional answers.
SHResult assemble(const Page& e3, const SpectrumDescriptor& spec, int n);

// Text table in the layout of the printed pages (rows q descending).
std::string render_page(const Page& page, int columns = -1);
std::vector<std::vector<std::string>> page_cells(const Page& page, int columns = -1);

// H^5(K(Z2,2); C^x) and neighbours, from em(2, 7).
AbGroupExpr h_bz2_cx(int degree);

// Convenience: the full twisted run over K(Z2,2) used by the tables.
struct WittRun {
  Page e2, e3;
};
WittRun witt_run(int pmax = 5, int trunc = 7, bool twisted = true);

}  // namespace ordcalc

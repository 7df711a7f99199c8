#include "ordcalc/classify.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "ordcalc/em_space.hpp"
#include "ordcalc/equivariant.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/supercohomology.hpp"

namespace ordcalc {

std::string to_string(Statistics s) { return s == Statistics::Bosonic ? "bosonic" : "fermionic"; }

Statistics parse_statistics(const std::string& s) {
  if (s == "bosonic") return Statistics::Bosonic;
  if (s == "fermionic") return Statistics::Fermionic;
  throw ValidationError("statistics must be bosonic or fermionic, got '" + s + "'");
}

int ZeroOneResult::count_for_size(int k) const {
  int n = 0;
  for (const auto& c : classes) n += c.size == 0 || c.size == k;
  return n;
}

namespace {

// J (+) J (+) ... on k = 2m, with J = [[0,-1],[1,0]]
QIMatrix symplectic_block(int k) {
  QIMatrix f(k, QIVector(k));
  for (int b = 0; b + 1 < k; b += 2) {
    f[b][b + 1] = -1;
    f[b + 1][b] = 1;
  }
  return f;
}

std::vector<QIMatrix> real_structure_candidates(int k) {
  std::vector<QIMatrix> out{identity_matrix(k)};
  // a diagonal phase and a permutation, both with f conj(f) = 1
  QIMatrix d = identity_matrix(k);
  d[0][0] = QI::i();
  out.push_back(d);
  if (k >= 2) {
    QIMatrix s = identity_matrix(k);
    std::swap(s[0], s[1]);
    out.push_back(s);
  }
  if (k % 2 == 0) out.push_back(symplectic_block(k));
  return out;
}

bool nontrivial_symmetry(const Symmetry& s) {
  if (s.group.order() > 1) return true;
  return false;
}

void check_tr(const Symmetry& s) {
  if (s.time_reversal) s.time_reversal->validate(s.group);
}

bool has_antiunitary(const Symmetry& s) {
  if (!s.time_reversal) return false;
  for (auto o : s.time_reversal->orientation)
    if (o) return true;
  return false;
}

}  // namespace

ZeroOneResult classify_0_1(Statistics s, bool time_reversal, int max_size) {
  ZeroOneResult out;
  out.statistics = s;
  out.time_reversal = time_reversal;
  if (!time_reversal && s == Statistics::Bosonic) {
    SuperAlgebra c = base_field(FieldKind::QI);
    if (centre(c).dim() != 1 || !is_separable(c).separable) throw std::logic_error("C is not central simple");
    out.classes.push_back({0, {"C", BrauerKind::Trivial, false}, "Mat_k(C)"});
    return out;
  }
  if (!time_reversal && s == Statistics::Fermionic) {
    for (const auto& a : {mat(base_field(FieldKind::QI), 1, 0), clifford(1)}) {
      BrauerClass c = super_brauer_class_C(a);
      out.classes.push_back({0, c, c.kind == BrauerKind::Even ? "Mat_{p|q}(C)" : "Mat_k(Cliff(1))"});
    }
    return out;
  }
  if (time_reversal && s == Statistics::Bosonic) {
    if (max_size < 1 || max_size > 6) throw ValidationError("classify_0_1: sizes 1..6");
    for (int k = 1; k <= max_size; ++k) {
      std::set<std::string> seen;
      for (const auto& f : real_structure_candidates(k)) {
        RealFormResult r = real_form(k, f);
        if (!seen.insert(r.cls.name()).second) continue;
        out.classes.push_back({k, r.cls, r.cls.kind == BrauerKind::R ? "Mat_" + std::to_string(k) + "(R)"
                                                                     : "Mat_" + std::to_string(k / 2) + "(H)"});
      }
    }
    return out;
  }
  throw UnsupportedInput(
      "not implemented: (0+1)d classification supports (bosonic, none), (fermionic, none), (bosonic, Z2^T)");
}

ClassifyResponse classify_1_1(Statistics s, const Symmetry& sym, const GSet& x) {
  check_tr(sym);
  x.validate(sym.group);
  if (x.points == 0) throw ValidationError("classify_1_1: empty target set");
  ClassifyResponse r;
  r.dimension = "1+1";
  r.statistics = s;
  r.anomaly.present = nontrivial_symmetry(sym) || has_antiunitary(sym);
  if (s == Statistics::Bosonic) {
    ReducedEquivariantResult red = reduced_equivariant(x, sym.group, sym.time_reversal, cstar_coefficients(sym.time_reversal), 2);
    r.group = red.reduced.group;
    r.class_count = red.reduced.group.order();
    r.truncations.push_back({"borel", red.truncation});
    for (std::size_t i = 0; i < red.reduced.orders.size(); ++i)
      r.representatives.push_back("pair (alpha, beta) generator " + std::to_string(i) + " of order " +
                                  std::to_string(red.reduced.orders[i]));
    if (r.anomaly.present) {
      r.anomaly.target = red.point.group;
      r.anomaly.image = red.anomaly_image;
      r.anomaly.nonzero = red.anomaly_nonzero;
      r.anomaly.description = "image of H~^2_G(X; C^x) in H^3_G(pt; C^x) = " + red.point.group.pretty();
    }
    return r;
  }
  if (has_antiunitary(sym))
    throw UnsupportedInput("not implemented: fermionic (1+1)d classification with time reversal");
  const int n = 5;
  CylinderData cyl = borel_cylinder(x, sym.group, n);
  AhssBase b;
  b.cx = cyl.cylinder;
  b.relative = cyl.in_source;
  b.name = "(Cyl, X//G)";
  SpectrumDescriptor spec = sh_spectrum();
  Page p2 = e2(b, spec, n - 1);
  SHResult res = assemble(turn_page(p2, b, spec), spec, 3);
  r.group = res.group;
  if (res.group) r.class_count = res.group->order();
  r.associated_graded = res.associated_graded;
  r.ambiguity = res.ambiguity;
  r.assumptions = res.assumptions;
  r.truncations.push_back({"cylinder", n});
  if (r.anomaly.present) {
    SHResult pt = sh(FiniteGroupoid::classifying(sym.group), 3);
    r.anomaly.target = pt.group.value_or(AbGroupExpr::zero());
    r.anomaly.description = "lives in SH^3(BG); the connecting map is not evaluated for the SH spectrum";
    r.ambiguity.push_back("anomaly image in SH^3(BG) not computed");
  }
  return r;
}

ClassifyResponse classify_3_1_fermionic(const FiniteGroupoid& target) {
  if (target.components.empty()) throw ValidationError("classify_3_1: empty target groupoid");
  ClassifyResponse r;
  r.dimension = "3+1";
  r.statistics = Statistics::Fermionic;
  const int n = 7;
  CylinderData cyl = groupoid_cylinder(target, n);
  AhssBase b;
  b.cx = cyl.cylinder;
  b.relative = cyl.in_source;
  b.name = "(Cyl, X)";
  SpectrumDescriptor spec = sw_spectrum();
  Page p2 = e2(b, spec, n - 1);
  SHResult res = assemble(turn_page(p2, b, spec), spec, 5);
  r.group = res.group;
  if (res.group && res.group->order()) r.class_count = res.group->order();
  for (auto gp : res.associated_graded) {
    gp.p -= 1;  // report in the grading of X
    r.associated_graded.push_back(gp);
  }
  r.ambiguity = res.ambiguity;
  r.assumptions = res.assumptions;
  for (const auto& c : res.conditional) r.notes.push_back("if " + c.condition + ": " + c.group.pretty());
  r.truncations.push_back({"cylinder", n});
  if (target.connected()) {
    SHResult gauge = sh(target, 4);
    std::string g = gauge.group ? gauge.group->pretty() : "graded";
    for (const auto& gp : gauge.associated_graded)
      g += " (" + std::to_string(gp.p) + "," + std::to_string(gp.q) + "):" + gp.group.cell();
    r.notes.push_back("SH^4(BG) = " + g);
    for (const auto& a : gauge.ambiguity) r.notes.push_back("SH^4(BG): " + a);
    r.truncations.push_back({"nerve", 6});
  }
  return r;
}

ClassifyResponse classify_3_1_bosonic(const std::vector<SuperGroup>& components) {
  if (components.empty()) throw ValidationError("classify_3_1: no components");
  ClassifyResponse r;
  r.dimension = "3+1";
  r.statistics = Statistics::Bosonic;
  AbGroupExpr total;
  bool exact = true;
  std::int64_t count = 1;
  for (std::size_t c = 0; c < components.size(); ++c) {
    BosonicReport rep = sh_equivariant_bz2(components[c], 4);
    const std::string tag = components.size() > 1 ? "component " + std::to_string(c) + ": " : "";
    if (rep.reduced.group) total = total + *rep.reduced.group;
    else exact = false;
    if (rep.reduced.finite_order) count *= *rep.reduced.finite_order;
    else exact = false;
    for (const auto& gp : rep.reduced.associated_graded) r.associated_graded.push_back(gp);
    for (const auto& a : rep.reduced.ambiguity) r.ambiguity.push_back(tag + a);
    for (const auto& a : rep.reduced.assumptions) r.assumptions.push_back(tag + a);
    r.notes.push_back(tag + "model " + rep.model);
    for (const auto& line : rep.comparison) r.notes.push_back(tag + line);
    r.notes.push_back(tag + "unreduced: " +
                      (rep.unreduced.group ? rep.unreduced.group->pretty()
                                           : "graded order " + (rep.unreduced.finite_order
                                                                    ? std::to_string(*rep.unreduced.finite_order)
                                                                    : std::string("?"))));
    r.notes.push_back(tag + (rep.consistent ? "consistent with H^4(BG; C^x)" : "INCONSISTENT with H^4(BG; C^x)"));
    r.truncations.push_back({tag + "base", rep.truncation});
  }
  if (exact) {
    r.group = total;
    r.class_count = count;
  }
  return r;
}

const std::vector<std::string>& paper_table_names() {
  static const std::vector<std::string> names{"witt-e2", "witt-e3", "witt-degree4", "h5", "em-betti"};
  return names;
}

namespace {

const WittRun& cached_witt_run() {
  static std::once_flag once;
  static WittRun run;
  std::call_once(once, [] { run = witt_run(); });
  return run;
}

std::vector<std::vector<std::string>> page_rows(const Page& p) {
  auto cells = page_cells(p);
  std::vector<std::vector<std::string>> rows;
  for (int q = static_cast<int>(cells.size()) - 1; q >= 0; --q) {
    std::vector<std::string> row{std::to_string(p.min_q + q)};
    row.insert(row.end(), cells[q].begin(), cells[q].end());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<std::string>> read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read golden file " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<std::string>> generate_table(const std::string& which) {
  if (which == "witt-e2") return page_rows(cached_witt_run().e2);
  if (which == "witt-e3") return page_rows(cached_witt_run().e3);
  if (which == "witt-degree4") {
    SHResult r = assemble(cached_witt_run().e3, sw_spectrum(), 4);
    std::vector<std::vector<std::string>> rows;
    auto graded = r.associated_graded;
    std::sort(graded.begin(), graded.end(), [](const GradedPiece& a, const GradedPiece& b) { return a.p < b.p; });
    for (const auto& gp : graded) {
      if (gp.group.symbols().size()) continue;  // the sW layer is reported separately
      rows.push_back({"(" + std::to_string(gp.p) + "," + std::to_string(gp.q) + ")", gp.group.cell()});
    }
    rows.push_back({"order", r.finite_order ? std::to_string(*r.finite_order) : "?"});
    return rows;
  }
  if (which == "h5") {
    std::vector<std::vector<std::string>> rows;
    for (int d : {1, 4, 5}) rows.push_back({std::to_string(d), h_bz2_cx(d).cell()});
    return rows;
  }
  if (which == "em-betti") {
    EMBetti b = em_betti(2, 6);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < b.z2_dims.size(); ++k) {
      int d = b.z2_dims[k];
      std::string z2 = d == 0 ? "0" : d == 1 ? "Z2" : "Z2^" + std::to_string(d);
      rows.push_back({std::to_string(k), z2, b.qz_groups[k]});
    }
    return rows;
  }
  throw ValidationError("unknown table '" + which + "'");
}

bool cell_matches(const std::string& golden, const std::string& got) { return golden == "⋯" || golden == got; }

TableResult paper_tables(const std::string& which, const std::string& golden_dir) {
  TableResult t;
  t.name = which;
  t.rows = generate_table(which);
  t.golden_path = golden_dir + "/" + which + ".tsv";
  auto golden = read_golden(t.golden_path);
  if (which == "witt-e2") t.text = render_page(cached_witt_run().e2);
  else if (which == "witt-e3") t.text = render_page(cached_witt_run().e3);
  else {
    std::ostringstream os;
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << row[c];
      os << "\n";
    }
    t.text = os.str();
  }
  const std::size_t nr = std::max(golden.size(), t.rows.size());
  for (std::size_t r = 0; r < nr; ++r) {
    const std::vector<std::string> empty;
    const auto& g = r < golden.size() ? golden[r] : empty;
    const auto& o = r < t.rows.size() ? t.rows[r] : empty;
    const std::size_t nc = std::max(g.size(), o.size());
    for (std::size_t c = 0; c < nc; ++c) {
      std::string gc = c < g.size() ? g[c] : "(missing)";
      std::string oc = c < o.size() ? o[c] : "(missing)";
      if (!cell_matches(gc, oc))
        t.diffs.push_back({"row " + std::to_string(r) + " (" + (g.empty() ? "" : g[0]) + ") col " + std::to_string(c), gc, oc});
    }
  }
  t.match = t.diffs.empty();
  return t;
}

}  // namespace ordcalc

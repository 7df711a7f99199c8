// Acceptance run: one PASS/FAIL line per criterion, with wall-clock budgets.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ordcalc/ahss.hpp"
#include "ordcalc/classify.hpp"
#include "ordcalc/cohomology.hpp"
#include "ordcalc/em_space.hpp"
#include "ordcalc/equivariant.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/steenrod.hpp"
#include "ordcalc/superalgebra.hpp"
#include "ordcalc/supercohomology.hpp"

using namespace ordcalc;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void expect(bool c, const std::string& what) {
    if (!c) {
      if (ok) why << what;
      else why << "; " << what;
      ok = false;
    }
  }
};

bool run(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s) o.expect(false, "over budget");
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << s << " s of " << budget_s << " s)";
  if (!o.ok) std::cout << ": " << o.why.str();
  std::cout << std::endl;
  return o.ok;
}

const TimeReversalTag kT{{0, 1}};

}  // namespace

int main() {
  int failed = 0;

  failed += !run(1, "cyclic group integral cohomology closed form", 10, [](Outcome& o) {
    for (int m : {2, 3, 4}) {
      auto bg = nerve(FiniteGroup::cyclic(m), 7);
      for (int k = 0; k <= 6; ++k) {
        AbGroupExpr want = k == 0 ? AbGroupExpr::free(1) : k % 2 ? AbGroupExpr::zero() : AbGroupExpr::cyclic(m);
        AbGroupExpr got = cohomology(bg, CoeffModule::integers(), k).group;
        o.expect(got == want, "m=" + std::to_string(m) + " k=" + std::to_string(k) + " got " + got.cell());
      }
    }
  });

  failed += !run(2, "group cohomology quartet with C^x coefficients", 10, [](Outcome& o) {
    auto bg = nerve(FiniteGroup::cyclic(2), 5);
    o.expect(cohomology(bg, auto_qmodz(bg, 2), 2).group.is_zero(), "H2(Z2)");
    o.expect(cohomology(bg, auto_qmodz(bg, 2, kT), 2).group == AbGroupExpr::cyclic(2), "H2(Z2T)");
    o.expect(cohomology(bg, auto_qmodz(bg, 3), 3).group == AbGroupExpr::cyclic(2), "H3(Z2)");
    o.expect(cohomology(bg, auto_qmodz(bg, 3, kT), 3).group.is_zero(), "H3(Z2T)");
  });

  failed += !run(3, "K(Z2,2) cohomology tables and Steenrod basis", 300, [](Outcome& o) {
    EMSpace e = em(2, 7);
    const int z2[] = {1, 0, 1, 1, 1, 2};
    const char* cx[] = {"C^×", "0", "Z2", "0", "Z4", "Z2"};
    for (int k = 0; k <= 5; ++k) {
      auto a = cohomology(e.underlying, CoeffModule::mod(2), k);
      o.expect(static_cast<int>(a.orders.size()) == z2[k], "Z2 degree " + std::to_string(k));
      auto b = cohomology(e.underlying, auto_qmodz(e.underlying, k), k).group.cell();
      o.expect(b == cx[k], "C^x degree " + std::to_string(k) + " got " + b);
    }
    auto rep = verify_steenrod_basis(e, 5);
    o.expect(rep.ok, "Steenrod basis: " + rep.message);
  });

  failed += !run(4, "twisted spectral sequence over K(Z2,2)", 300, [](Outcome& o) {
    WittRun w = witt_run();
    TableResult t = paper_tables("witt-e3");
    o.expect(t.match, "E3 differs from the golden table");
    bool from02 = false;
    for (const auto& a : w.e3.arrows)
      if (a.p == 0 && a.q == 2 && a.r == 2) from02 = a.nonzero;
    o.expect(from02, "d2 out of (0,2) is zero");
    SHResult d4 = assemble(w.e3, sw_spectrum(), 4);
    o.expect(d4.finite_order.value_or(0) == 16, "degree 4 graded order");
    std::map<std::pair<int, int>, std::string> g;
    for (const auto& gp : d4.associated_graded) g[{gp.p, gp.q}] = gp.group.cell();
    o.expect(g[std::pair{2, 2}] == "Z2" && g[std::pair{3, 1}] == "Z2" && g[std::pair{4, 0}] == "Z4", "degree 4 layers");
    o.expect(h_bz2_cx(5) == AbGroupExpr::cyclic(2), "H5(BZ2-form; C^x)");
    SHResult d5 = assemble(w.e3, sw_spectrum(), 5);
    bool pair = d5.conditional.size() == 2;
    if (pair) {
      std::map<std::string, std::string> c;
      for (const auto& s : d5.conditional) c[s.condition] = s.group.cell();
      pair = c["d5~ = 0"] == "Z2" && c["d5~ != 0"] == "0";
    }
    o.expect(pair, "degree 5 conditional pair");
  });

  failed += !run(5, "(1+1)d classification scenarios", 30, [](Outcome& o) {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    Symmetry u{z2, {}}, t{z2, kT};
    auto a = classify_1_1(Statistics::Bosonic, u, GSet::fixed_points(z2, 2));
    o.expect(a.class_count.value_or(-1) == 1, "Z2 trivial action");
    auto b = classify_1_1(Statistics::Bosonic, t, GSet::fixed_points(z2, 2));
    o.expect(b.class_count.value_or(-1) == 2, "Z2T trivial action");
    auto c = classify_1_1(Statistics::Bosonic, u, GSet::regular(z2));
    o.expect(c.class_count.value_or(-1) == 2 && c.anomaly.nonzero, "Z2 free");
    auto d = classify_1_1(Statistics::Bosonic, t, GSet::regular(z2));
    o.expect(d.class_count.value_or(-1) == 1, "Z2T free");
    for (auto s : {Statistics::Bosonic, Statistics::Fermionic})
      for (const auto& sym : {Symmetry{FiniteGroup::trivial(), {}}, u, t}) {
        if (s == Statistics::Fermionic && sym.time_reversal) continue;  // not supported
        auto r = classify_1_1(s, sym, GSet::point(sym.group));
        o.expect(r.group && r.group->is_zero(), "point, " + to_string(s));
      }
  });

  failed += !run(6, "superalgebra classes", 30, [](Outcome& o) {
    auto h = real_form(2, {{0, -1}, {1, 0}});
    o.expect(h.cls.kind == BrauerKind::H && brauer_class_R(h.algebra).kind == BrauerKind::H, "quaternionic real form");
    o.expect(real_form(1, identity_matrix(1)).cls.kind == BrauerKind::R, "k=1");
    o.expect(real_form(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}).cls.kind == BrauerKind::R, "k=3 swap");
    o.expect(real_form(3, {{QI::i(), 0, 0}, {0, 1, 0}, {0, 0, -1}}).cls.kind == BrauerKind::R, "k=3 diagonal");
    for (int n = 0; n <= 4; ++n)
      o.expect(super_brauer_class_C(clifford(n)).kind == (n % 2 ? BrauerKind::Odd : BrauerKind::Even),
               "Cliff(" + std::to_string(n) + ")");
    o.expect(super_brauer_class_C(tensor(clifford(1), clifford(1))).kind == BrauerKind::Even, "Cliff(1)^2");
    o.expect(brauer_class_R(tensor(quaternions(), quaternions())).kind == BrauerKind::R, "H x H");
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; p + q <= 3; ++q) {
        if (p + q == 0) continue;
        std::string at = " mat(" + std::to_string(p) + "|" + std::to_string(q) + ")";
        o.expect(brauer_class_R(mat(quaternions(), p, q)).kind == BrauerKind::H, "H" + at);
        o.expect(brauer_class_R(mat(base_field(FieldKind::Q), p, q)).kind == BrauerKind::R, "R" + at);
        o.expect(super_brauer_class_C(mat(clifford(1), p, q)).kind == BrauerKind::Odd, "Cliff(1)" + at);
        o.expect(super_brauer_class_C(mat(clifford(2), p, q)).kind == BrauerKind::Even, "Cliff(2)" + at);
      }
  });

  failed += !run(7, "supercohomology readouts", 10, [](Outcome& o) {
    auto pt = FiniteGroupoid::point();
    auto s2 = sh(pt, 2);
    o.expect(s2.group && *s2.group == AbGroupExpr::cyclic(2), "SH2(pt)");
    auto r2 = reduced_sh(FiniteGroupoid::discrete(2), 2);
    o.expect(r2.group && *r2.group == AbGroupExpr::cyclic(2), "reduced SH2 of two points");
    auto spec = sh_spectrum();
    for (int n = 0; n <= 2; ++n) {
      auto r = sh(pt, n);
      o.expect(r.group && *r.group == spec.layer(n)->homotopy(), "SH" + std::to_string(n) + "(pt)");
    }
  });

  failed += !run(8, "property suites", 300, [](Outcome& o) {
    std::string cmd = std::string("\"") + ORDCALC_PROPERTIES_BIN + "\" --gtest_brief=1 > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    o.expect(rc == 0, "property suite exited with " + std::to_string(rc));
  });

  failed += !run(9, "bosonic consistency report against H4(BZ2; C^x)", 300, [](Outcome& o) {
    BosonicReport r = sh_equivariant_bz2({FiniteGroup::cyclic(2), 0}, 4);
    o.expect(r.ordinary.is_zero(), "H4(BZ2; C^x) = " + r.ordinary.cell());
    bool reduced_zero = r.reduced.group && r.reduced.group->is_zero();
    o.expect(reduced_zero || !r.reduced.ambiguity.empty(), "surplus without a flag");
    o.expect(r.consistent, "report marked inconsistent");
  });

  return failed == 0 ? 0 : 1;
}

// ordcalc: command-line front end.  Exit codes: 0 ok, 2 bad input,
// 3 truncated or ambiguity-only result (output still printed), 4 golden mismatch.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "ordcalc/ahss.hpp"
#include "ordcalc/classify.hpp"
#include "ordcalc/em_space.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/io.hpp"
#include "ordcalc/superalgebra.hpp"
#include "ordcalc/supercohomology.hpp"

using namespace ordcalc;

namespace {

constexpr int kOk = 0, kInvalid = 2, kAmbiguous = 3, kMismatch = 4;

void print_lines(const std::string& head, const std::vector<std::string>& v) {
  for (const auto& s : v) std::cout << head << s << "\n";
}

std::string graded_text(const std::vector<GradedPiece>& g) {
  std::string s;
  for (const auto& gp : g) {
    s += "  (" + std::to_string(gp.p) + "," + std::to_string(gp.q) + ") " + gp.group.cell();
    if (!gp.note.empty()) s += "  [" + gp.note + "]";
    s += "\n";
  }
  return s;
}

void print_sh(const SHResult& r) {
  std::cout << "degree " << r.degree << ": " << (r.group ? r.group->pretty() : std::string("(not determined)")) << "\n";
  std::cout << "associated graded:\n" << graded_text(r.associated_graded);
  if (r.finite_order) std::cout << "graded order " << *r.finite_order << "\n";
  for (const auto& c : r.conditional) std::cout << "if " << c.condition << ": " << c.group.pretty() << "\n";
  print_lines("flag: ", r.ambiguity);
  print_lines("assumed: ", r.assumptions);
}

int sh_status(const SHResult& r) { return r.group && !r.truncated ? kOk : kAmbiguous; }

void print_response(const ClassifyResponse& r) {
  std::cout << r.dimension << " " << to_string(r.statistics) << "\n";
  std::cout << "group: " << (r.group ? r.group->pretty() : std::string("(not determined)")) << "\n";
  if (r.class_count) std::cout << "classes: " << *r.class_count << "\n";
  if (!r.associated_graded.empty()) std::cout << "associated graded:\n" << graded_text(r.associated_graded);
  if (r.anomaly.present)
    std::cout << "anomaly: " << (r.anomaly.nonzero ? "nonzero, " : "zero, ") << "image " << r.anomaly.image.pretty()
              << " in " << r.anomaly.target.pretty() << "\n";
  print_lines("note: ", r.notes);
  print_lines("flag: ", r.ambiguity);
  print_lines("assumed: ", r.assumptions);
}

SuperAlgebra construct(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  int n = colon == std::string::npos ? 0 : std::stoi(spec.substr(colon + 1));
  if (kind == "clifford") return clifford(n);
  if (kind == "quaternions") return quaternions();
  if (kind == "matrix") return matrix_algebra(n, FieldKind::Q);
  if (kind == "cmatrix") return matrix_algebra(n, FieldKind::QI);
  if (kind == "field") return base_field(n ? FieldKind::QI : FieldKind::Q);
  throw ValidationError("unknown construction '" + spec + "' (clifford:n, quaternions, matrix:k, cmatrix:k, field:0|1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordcalc: cohomology, spectral sequences and algebra classes for topological order classification"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  // classify
  auto* cls = app.add_subcommand("classify", "classify topological orders");
  std::string dim = "1+1", stats = "bosonic", group_file, target_file, tr_file, symmetry = "none";
  int max_size = 4;
  cls->add_option("--dim", dim, "0+1, 1+1 or 3+1")->check(CLI::IsMember({"0+1", "1+1", "3+1"}));
  cls->add_option("--stats", stats, "bosonic or fermionic")->check(CLI::IsMember({"bosonic", "fermionic"}));
  cls->add_option("--group", group_file, "symmetry group JSON");
  cls->add_option("--target", target_file, "G-set (1+1), groupoid or supergroup (3+1) JSON");
  cls->add_option("--time-reversal", tr_file, "orientation character JSON");
  cls->add_option("--symmetry", symmetry, "0+1 only: none or z2t")->check(CLI::IsMember({"none", "z2t"}));
  cls->add_option("--max-size", max_size, "0+1 with z2t: largest matrix size");
  cls->add_flag("--json", json);

  // ahss
  auto* ah = app.add_subcommand("ahss", "Atiyah-Hirzebruch pages over a finite base");
  std::string preset = "sW", base = "k(z2,2)", render = "text";
  int pmax = 5, trunc = -1, degree = -1;
  bool untwisted = false;
  ah->add_option("--preset", preset, "sW, SH or W")->check(CLI::IsMember({"sW", "SH", "W"}));
  ah->add_option("--base", base, "k(z2,2), point, or a groupoid JSON file");
  ah->add_option("--pmax", pmax, "last column");
  ah->add_option("--trunc", trunc, "base truncation (default pmax + 2)");
  ah->add_option("--degree", degree, "also assemble this total degree");
  ah->add_option("--render", render, "text or json")->check(CLI::IsMember({"text", "json"}));
  ah->add_flag("--untwisted", untwisted, "drop the twist over k(z2,2)");
  ah->add_flag("--json", json);

  // paper tables
  auto* pt = app.add_subcommand("paper-tables", "regenerate the reference tables and diff against golden files");
  std::string table = "all", golden_dir = ORDCALC_DATA_DIR "/golden";
  pt->add_option("name", table, "witt-e2, witt-e3, witt-degree4, h5, em-betti or all");
  pt->add_option("--golden-dir", golden_dir);
  pt->add_flag("--json", json);

  // algebra
  auto* al = app.add_subcommand("algebra", "superalgebra invariants");
  std::string op, algebra_file, construction;
  al->add_option("op", op, "show, centre, separable, brauer-r, super-brauer, spec, real-form")
      ->required()
      ->check(CLI::IsMember({"show", "centre", "separable", "brauer-r", "super-brauer", "spec", "real-form"}));
  al->add_option("file", algebra_file, "algebra JSON (real-form: {k, f})");
  al->add_option("--construct", construction, "clifford:n, quaternions, matrix:k, cmatrix:k, field:0|1");
  al->add_flag("--json", json);

  // em betti
  auto* eb = app.add_subcommand("em-betti", "cohomology table of K(Z2,level)");
  int level = 2, em_n = 6;
  eb->add_option("--level", level)->check(CLI::Range(1, 2));
  eb->add_option("--n", em_n, "truncation");
  eb->add_flag("--json", json);

  // supercohomology
  auto* shc = app.add_subcommand("sh", "extended supercohomology of a finite groupoid");
  std::string gpd_file;
  int sh_degree = 2;
  bool reduced = false;
  shc->add_option("--groupoid", gpd_file, "groupoid JSON")->required();
  shc->add_option("--degree", sh_degree);
  shc->add_flag("--reduced", reduced);
  shc->add_flag("--json", json);

  auto* bos = app.add_subcommand("bosonic", "twisted supercohomology of BG with a Z2 1-form symmetry");
  std::string sg_file;
  int bos_degree = 4;
  bool use_sw = false;
  bos->add_option("--supergroup", sg_file, "supergroup JSON")->required();
  bos->add_option("--degree", bos_degree);
  bos->add_flag("--sw", use_sw, "use the sW window instead of SH");
  bos->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cls->parsed()) {
      Statistics s = parse_statistics(stats);
      if (dim == "0+1") {
        ZeroOneResult r = classify_0_1(s, symmetry == "z2t", max_size);
        if (json) {
          std::cout << to_json(r).dump(2) << "\n";
        } else {
          for (const auto& c : r.classes)
            std::cout << (c.size ? "k=" + std::to_string(c.size) + " " : "") << c.cls.name() << "  "
                      << c.representative << "\n";
        }
        return kOk;
      }
      ClassifyResponse r;
      if (dim == "1+1") {
        if (target_file.empty()) throw ValidationError("--target is required for 1+1");
        Symmetry sym;
        if (!group_file.empty()) sym.group = group_from_json(read_json_file(group_file));
        if (!tr_file.empty()) sym.time_reversal = time_reversal_from_json(read_json_file(tr_file), sym.group);
        GSet x = gset_from_json(read_json_file(target_file), sym.group);
        r = classify_1_1(s, sym, x);
      } else {
        if (target_file.empty()) throw ValidationError("--target is required for 3+1");
        Json t = read_json_file(target_file);
        if (s == Statistics::Fermionic) r = classify_3_1_fermionic(groupoid_from_json(t));
        else r = classify_3_1_bosonic(supergroups_from_json(t));
      }
      if (json) std::cout << to_json(r).dump(2) << "\n";
      else print_response(r);
      return r.group && r.ambiguity.empty() ? kOk : kAmbiguous;
    }

    if (ah->parsed()) {
      SpectrumDescriptor spec = preset == "sW" ? sw_spectrum() : preset == "SH" ? sh_spectrum() : w_spectrum();
      if (trunc < 0) trunc = pmax + 2;
      AhssBase b;
      if (base == "k(z2,2)" || base == "K(Z2,2)") {
        EMSpace e = em(2, trunc);
        b.cx = e.underlying;
        if (!untwisted) b.twist = e.fundamental;
        b.name = "K(Z2,2)";
      } else if (base == "point") {
        b.cx = nerve(FiniteGroupoid::point(), trunc);
        b.name = "pt";
      } else {
        b.cx = nerve(groupoid_from_json(read_json_file(base)), trunc);
        b.name = base;
      }
      Page p2 = e2(b, spec, pmax);
      Page p3 = turn_page(p2, b, spec);
      std::optional<SHResult> total;
      if (degree >= 0) total = assemble(p3, spec, degree);
      if (render == "json" || json) {
        Json j{{"preset", spec.name}, {"base", b.name}, {"E2", to_json(p2)}, {"E3", to_json(p3)}};
        if (total) j["total"] = to_json(*total);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << render_page(p2) << "\n";
        for (const auto& a : p3.arrows)
          if (a.nonzero)
            std::cout << "d" << a.r << " (" << a.p << "," << a.q << ") -> (" << a.tp << "," << a.tq << ") " << a.rule
                      << "\n";
        std::cout << "\n" << render_page(p3);
        print_lines("assumed: ", p3.assumptions);
        if (total) {
          std::cout << "\n";
          print_sh(*total);
        }
      }
      return total ? sh_status(*total) : kOk;
    }

    if (pt->parsed()) {
      std::vector<std::string> names = table == "all" ? paper_table_names() : std::vector<std::string>{table};
      bool all_match = true;
      Json out = Json::array();
      for (const auto& n : names) {
        TableResult t = paper_tables(n, golden_dir);
        all_match = all_match && t.match;
        if (json) {
          out.push_back(to_json(t));
          continue;
        }
        std::cout << "== " << n << (t.match ? " (matches golden)" : " (MISMATCH)") << "\n" << t.text;
        for (const auto& d : t.diffs) std::cout << "  diff " << d.where << ": expected " << d.expected << ", got " << d.got << "\n";
        std::cout << "\n";
      }
      if (json) std::cout << out.dump(2) << "\n";
      return all_match ? kOk : kMismatch;
    }

    if (al->parsed()) {
      if (op == "real-form") {
        if (algebra_file.empty()) throw ValidationError("real-form needs a {k, f} JSON file");
        Json j = read_json_file(algebra_file);
        RealFormResult r = real_form(j.at("k").get<int>(), matrix_from_json(j.at("f")));
        if (json) std::cout << Json{{"class", to_json(r.cls)}, {"square", to_string(r.square)}, {"algebra", to_json(r.algebra)}}.dump(2) << "\n";
        else std::cout << "class " << r.cls.name() << ", f conj(f) = " << to_string(r.square) << ", dim " << r.algebra.dim() << "\n";
        return kOk;
      }
      SuperAlgebra a;
      if (!construction.empty()) a = construct(construction);
      else if (!algebra_file.empty()) a = algebra_from_json(read_json_file(algebra_file));
      else throw ValidationError("give an algebra file or --construct");
      Json j;
      std::ostringstream text;
      if (op == "show") {
        j = to_json(a);
        text << j.dump(2);
      } else if (op == "centre") {
        Subspace z = centre(a);
        j = {{"dim", z.dim()}};
        text << "supercentre of dimension " << z.dim();
      } else if (op == "separable") {
        auto s = is_separable(a);
        j = {{"separable", s.separable}, {"radical_dim", s.radical.dim()}};
        text << (s.separable ? "separable" : "not separable, radical of dimension " + std::to_string(s.radical.dim()));
      } else if (op == "brauer-r") {
        BrauerClass c = brauer_class_R(a);
        j = to_json(c);
        text << "Brauer class over R: " << c.name();
      } else if (op == "super-brauer") {
        BrauerClass c = super_brauer_class_C(a);
        j = to_json(c);
        text << "super Brauer class over C: " << c.name();
      } else {
        SpectrumResult s = spec_commutative(a);
        j = {{"points", s.points()}};
        text << s.points() << " points";
      }
      std::cout << (json ? j.dump(2) : text.str()) << "\n";
      return kOk;
    }

    if (eb->parsed()) {
      EMBetti b = em_betti(level, em_n);
      if (json) {
        std::cout << Json{{"level", level}, {"n", em_n}, {"simplices", b.simplices}, {"z2", b.z2_dims}, {"c_star", b.qz_groups}}.dump(2) << "\n";
      } else {
        std::cout << "k  simplices  Z2  C^×\n";
        for (std::size_t k = 0; k < b.z2_dims.size(); ++k)
          std::cout << k << "  " << b.simplices[k] << "  " << b.z2_dims[k] << "  " << b.qz_groups[k] << "\n";
      }
      return kOk;
    }

    if (shc->parsed()) {
      FiniteGroupoid g = groupoid_from_json(read_json_file(gpd_file));
      SHResult r = reduced ? reduced_sh(g, sh_degree) : sh(g, sh_degree);
      if (json) std::cout << to_json(r).dump(2) << "\n";
      else print_sh(r);
      return sh_status(r);
    }

    if (bos->parsed()) {
      auto sgs = supergroups_from_json(read_json_file(sg_file));
      if (sgs.size() != 1) throw ValidationError("bosonic: give a single supergroup");
      BosonicReport r = sh_equivariant_bz2(sgs[0], bos_degree, use_sw ? BosonicPreset::SW : BosonicPreset::SH);
      if (json) {
        std::cout << to_json(r).dump(2) << "\n";
      } else {
        std::cout << "model: " << r.model << "\nreduced:\n";
        print_sh(r.reduced);
        std::cout << "unreduced:\n";
        print_sh(r.unreduced);
        std::cout << "H^" << bos_degree << "(BG; C^x) = " << r.ordinary.pretty() << "\n";
        print_lines("", r.comparison);
      }
      return sh_status(r.reduced);
    }
  } catch (const TruncationError& e) {
    std::cerr << "truncation: " << e.what() << "\n";
    return kAmbiguous;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const ClassificationError& e) {
    std::cerr << "classification: " << e.what() << "\n";
    return kInvalid;
  } catch (const UnsupportedInput& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInvalid;
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}

#include "ordcalc/ahss.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ordcalc/em_space.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/steenrod.hpp"

namespace ordcalc {

AbGroupExpr Layer::homotopy() const {
  switch (kind) {
    case LayerKind::Zero: return AbGroupExpr::zero();
    case LayerKind::Z2: return AbGroupExpr::cyclic(2);
    case LayerKind::Cstar: return AbGroupExpr::cstar();
    case LayerKind::Symbol: return AbGroupExpr::symbol({symbol, {}});
  }
  return {};
}

const Layer* SpectrumDescriptor::layer(int q) const {
  for (const auto& l : layers)
    if (l.q == q) return &l;
  return nullptr;
}

const Rule* SpectrumDescriptor::rule(int r, int from_q) const {
  for (const auto& x : rules)
    if (x.r == r && x.from_q == from_q) return &x;
  return nullptr;
}

void SpectrumDescriptor::validate() const {
  if (layers.empty()) throw ConfigurationError(name + ": empty spectrum window");
  for (std::size_t i = 1; i < layers.size(); ++i)
    if (layers[i].q != layers[i - 1].q + 1) throw ConfigurationError(name + ": window is not contiguous");
  for (const auto& r : rules) {
    const Layer* a = layer(r.from_q);
    const Layer* b = layer(r.to_q);
    if (!a || !b) throw ConfigurationError(name + ": rule " + r.name + " leaves the window");
    if (r.to_q != r.from_q - r.r + 1) throw ConfigurationError(name + ": rule " + r.name + " has the wrong bidegree");
    if (r.op == RuleOp::Sq2 && (a->kind != LayerKind::Z2 || b->kind != LayerKind::Z2 || r.r != 2))
      throw ConfigurationError(name + ": Sq2 rule needs Z2 -> Z2 at r = 2");
    if (r.op == RuleOp::SignSq2 && (a->kind != LayerKind::Z2 || b->kind != LayerKind::Cstar || r.r != 2))
      throw ConfigurationError(name + ": sign rule needs Z2 -> C^x at r = 2");
  }
}

SpectrumDescriptor sh_spectrum() {
  SpectrumDescriptor s;
  s.name = "SH";
  s.layers = {{0, LayerKind::Cstar, ""}, {1, LayerKind::Z2, ""}, {2, LayerKind::Z2, ""}};
  s.rules = {{2, 2, 1, RuleOp::Sq2, false, "Sq2", ""}, {2, 1, 0, RuleOp::SignSq2, false, "(-1)^Sq2", ""}};
  return s;
}

SpectrumDescriptor sw_spectrum() {
  SpectrumDescriptor s;
  s.name = "sW";
  s.layers = {{0, LayerKind::Cstar, ""},
              {1, LayerKind::Z2, ""},
              {2, LayerKind::Z2, ""},
              {3, LayerKind::Zero, ""},
              {4, LayerKind::Symbol, "sW"}};
  s.rules = {{2, 2, 1, RuleOp::Sq2, true, "Sq2+t", ""},
             {2, 1, 0, RuleOp::SignSq2, true, "(-1)^(Sq2+t)", ""},
             {5, 4, 0, RuleOp::Symbolic, false, "d5~",
              "d5~ is the obstruction to minimal modular extensions"}};
  return s;
}

SpectrumDescriptor w_spectrum() {
  SpectrumDescriptor s;
  s.name = "W";
  s.layers = {{0, LayerKind::Cstar, ""}};
  return s;
}

const Cell& Page::at(int p, int q) const {
  auto it = cells.find({p, q});
  if (it == cells.end()) throw std::out_of_range("page cell (" + std::to_string(p) + "," + std::to_string(q) + ")");
  return it->second;
}

namespace {

std::shared_ptr<const SimplicialCochainComplex> base_complex(const AhssBase& b) {
  return cochain_complex(b.cx, {}, b.relative);
}

CohomologyResult base_cohomology(const AhssBase& b, const CoeffModule& c, int p) {
  return complex_cohomology(base_complex(b), c, p);
}

CoeffModule cstar_for(const AhssBase& b, int p) {
  return CoeffModule::qmodz(std::max<std::int64_t>(2, auto_modulus(*base_complex(b), p, p)));
}

AbGroupExpr universal_coefficients(const AhssBase& b, const std::string& sym, int p) {
  auto cx = base_complex(b);
  AbGroupExpr hp = integral_homology(*cx, p);
  AbGroupExpr out;
  for (int i = 0; i < hp.rank(); ++i) out = out + AbGroupExpr::symbol({sym, {}});
  for (auto d : hp.torsion()) out = out + AbGroupExpr::symbol({sym, {{'[', d}}});
  if (p >= 1) {
    AbGroupExpr hm = integral_homology(*cx, p - 1);
    for (auto d : hm.torsion()) out = out + AbGroupExpr::symbol({sym, {{'/', d}}});
  }
  return out;
}

std::string pos(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// d2 of one Z2 cocycle, landing in the target module
Cochain apply_rule(const Rule& r, const AhssBase& b, const Cochain& x, const CoeffModule& target) {
  Cochain y = sq(2, x);
  if (r.twisted && b.twist) y = y + cup(*b.twist, x);
  if (r.op == RuleOp::SignSq2) return bockstein_sign(y, target.modulus);
  return y;
}

struct Outgoing {
  bool applies = false;    // a concrete differential was evaluated
  bool unknown = false;    // target beyond the window
  bool assumed = false;    // symbolic, assumed zero
  Vectors images;          // coordinates in the target E2 cell
  Vectors kernel;          // kernel generators in source coordinates
  bool nonzero = false;
};

}  // namespace

Page e2(const AhssBase& base, const SpectrumDescriptor& spec, int pmax) {
  spec.validate();
  if (base.cx.trunc() < pmax + 1)
    throw TruncationError("E2 through column " + std::to_string(pmax) + " needs truncation >= " +
                              std::to_string(pmax + 1),
                          pmax + 1);
  Page page;
  page.r = 2;
  page.pmax = pmax;
  page.min_q = spec.min_q();
  page.max_q = spec.max_q();
  for (const auto& l : spec.layers) {
    for (int p = 0; p <= pmax; ++p) {
      Cell c;
      switch (l.kind) {
        case LayerKind::Zero: break;
        case LayerKind::Symbol:
          c.symbolic = true;
          c.group = universal_coefficients(base, l.symbol, p);
          break;
        case LayerKind::Z2:
        case LayerKind::Cstar: {
          CoeffModule cf = l.kind == LayerKind::Z2 ? CoeffModule::mod(2) : cstar_for(base, p);
          auto h = std::make_shared<const CohomologyResult>(base_cohomology(base, cf, p));
          c.group = h->group;
          c.orders = h->orders;
          for (int i = 0; i < h->divisible_rank; ++i) c.orders.push_back(0);
          c.h = h;
          break;
        }
      }
      page.cells[{p, l.q}] = std::move(c);
    }
  }
  return page;
}

Page turn_page(const Page& page, const AhssBase& base, const SpectrumDescriptor& spec) {
  if (page.r != 2) throw ConfigurationError("turn_page evaluates d2 only; higher differentials are flagged");
  const int pmax = page.pmax;
  std::map<std::pair<int, int>, Outgoing> out;
  Page next;
  next.r = 3;
  next.pmax = pmax;
  next.min_q = page.min_q;
  next.max_q = page.max_q;
  next.assumptions = page.assumptions;
  for (const auto& [key, cell] : page.cells) {
    auto [p, q] = key;
    Outgoing o;
    const Rule* r = spec.rule(2, q);
    const Layer* tl = r ? spec.layer(r->to_q) : nullptr;
    if (!r || !tl || tl->kind == LayerKind::Zero || cell.group.is_zero()) {
      out[key] = o;
      continue;
    }
    const int tp = p + 2, tq = r->to_q;
    if (r->op == RuleOp::Symbolic || cell.symbolic || tl->kind == LayerKind::Symbol) {
      o.assumed = true;
      next.assumptions.push_back("d2 " + pos(p, q) + " -> " + pos(tp, tq) + " (" + r->name + ") assumed zero");
      out[key] = o;
      continue;
    }
    if (tp > pmax + 1) {
      o.unknown = true;
      out[key] = o;
      continue;
    }
    o.applies = true;
    const auto& gens = cell.h->generators;
    if (tp <= pmax) {
      const Cell& target = page.at(tp, tq);
      if (!target.group.is_zero()) {
        auto tcx = std::dynamic_pointer_cast<const SimplicialCochainComplex>(target.h->complex);
        for (const auto& g : gens) {
          Cochain y = apply_rule(*r, base, g, target.h->coeff);
          o.images.push_back(target.h->coordinates(tcx->to_basis(y)));
        }
        o.kernel = kernel_generators(cell.orders, o.images, target.orders);
        for (const auto& v : o.images) o.nonzero = o.nonzero || !is_zero_element(target.orders, v);
      } else {
        for (std::size_t i = 0; i < cell.orders.size(); ++i) {
          std::vector<std::int64_t> e(cell.orders.size(), 0);
          e[i] = 1;
          o.kernel.push_back(e);
        }
      }
    } else {
      // column pmax + 1: decide by coboundary membership over all combinations
      CoeffModule cf = tl->kind == LayerKind::Z2 ? CoeffModule::mod(2) : CoeffModule::qmodz(2);
      auto cx = base_complex(base);
      std::vector<std::vector<std::int64_t>> imgs;
      for (const auto& g : gens) imgs.push_back(cx->to_basis(apply_rule(*r, base, g, cf)));
      std::int64_t total = 1;
      for (auto ord : cell.orders) {
        if (ord == 0) throw std::logic_error("membership enumeration over an infinite group");
        total = checked_mul(total, ord);
      }
      if (total > (1 << 16)) throw UnsupportedInput("E2 cell too large for membership enumeration");
      const RingOps ring = cf.ring();
      for (std::int64_t code = 0; code < total; ++code) {
        std::vector<std::int64_t> c(cell.orders.size());
        std::int64_t rest = code;
        for (std::size_t i = 0; i < c.size(); ++i) {
          c[i] = rest % cell.orders[i];
          rest /= cell.orders[i];
        }
        std::vector<std::int64_t> v(cx->dim(tp), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i])
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = ring.add(v[j], ring.mul(c[i], imgs[i][j]));
        if (in_coboundaries(*cx, tp, cf, v))
          o.kernel.push_back(c);
        else
          o.nonzero = true;
      }
    }
    next.arrows.push_back({2, p, q, tp, tq, o.nonzero, r->name});
    out[key] = std::move(o);
  }
  for (const auto& [key, cell] : page.cells) {
    auto [p, q] = key;
    Cell c = cell;
    const Outgoing& o = out[key];
    if (o.unknown) {
      c.state = Cell::State::Unknown;
      next.cells[key] = std::move(c);
      continue;
    }
    if (cell.symbolic || cell.group.is_zero()) {
      next.cells[key] = std::move(c);
      continue;
    }
    Vectors kernel = o.applies ? o.kernel : Vectors{};
    if (!o.applies)
      for (std::size_t i = 0; i < cell.orders.size(); ++i) {
        std::vector<std::int64_t> e(cell.orders.size(), 0);
        e[i] = 1;
        kernel.push_back(e);
      }
    // incoming d2 from (p-2, q+1)
    Vectors image;
    if (p >= 2 && page.has(p - 2, q + 1)) {
      auto it = out.find({p - 2, q + 1});
      if (it != out.end() && it->second.applies) image = it->second.images;
    }
    c.kernel = kernel;
    c.image = image;
    bool untouched = image.empty() && (!o.applies || !o.nonzero);
    if (!untouched) c.group = subgroup_generated(cell.orders, kernel, image);
    next.cells[key] = std::move(c);
  }
  return next;
}

SHResult assemble(const Page& e3, const SpectrumDescriptor& spec, int n) {
  SHResult res;
  res.degree = n;
  res.assumptions = e3.assumptions;
  std::vector<const Rule*> named;
  for (const auto& r : spec.rules)
    if (r.r >= 3) named.push_back(&r);
  auto cell_state = [&](int p, int q) -> std::pair<bool, const Cell*> {
    // (maybe nonzero, cell or null when outside the page)
    const Layer* l = spec.layer(q);
    if (!l || l->kind == LayerKind::Zero || p < 0) return {false, nullptr};
    if (!e3.has(p, q)) return {true, nullptr};
    const Cell& c = e3.at(p, q);
    return {c.maybe_nonzero(), &c};
  };
  std::int64_t finite = 1;
  bool all_finite = true;
  std::vector<AbGroupExpr> layers;
  const Rule* cond_rule = nullptr;
  int cond_p = -1, cond_q = -1;
  bool cond_is_target = false;
  for (int q = spec.min_q(); q <= spec.max_q(); ++q) {
    const int p = n - q;
    if (p < 0) continue;
    auto [maybe, cell] = cell_state(p, q);
    if (!maybe) continue;
    if (!cell) {
      res.truncated = true;
      res.ambiguity.push_back("cell " + pos(p, q) + " lies outside the computed window");
      continue;
    }
    if (cell->state == Cell::State::Unknown) {
      res.truncated = true;
      res.ambiguity.push_back("cell " + pos(p, q) + " unknown at E3 (its d2 leaves the window)");
      continue;
    }
    GradedPiece gp{p, q, cell->group, ""};
    // higher differentials out of and into this cell
    const int rmax = e3.max_q - e3.min_q + 2;
    for (int r = 3; r <= rmax; ++r) {
      for (int dir = 0; dir < 2; ++dir) {
        const int sp = dir == 0 ? p : p - r, sq = dir == 0 ? q : q + r - 1;
        const int tp = sp + r, tq = sq - r + 1;
        auto [smaybe, scell] = cell_state(sp, sq);
        auto [tmaybe, tcell] = cell_state(tp, tq);
        if (!smaybe || !tmaybe) continue;
        const Rule* nr = spec.rule(r, sq);
        const std::string what = "d" + std::to_string(r) + " " + pos(sp, sq) + " -> " + pos(tp, tq);
        if (nr && nr->to_q == tq) {
          cond_rule = nr;
          cond_p = tp;
          cond_q = tq;
          cond_is_target = dir == 1;
          if (dir == 0) gp.note = "kernel of " + nr->name;
          continue;
        }
        bool symbolic = (scell && scell->symbolic) || (tcell && tcell->symbolic);
        if (symbolic) {
          res.assumptions.push_back(what + " assumed zero (symbolic entry)");
          continue;
        }
        if (spec.higher_unknown) res.ambiguity.push_back(what + " not determined");
      }
    }
    if (gp.group.is_zero()) continue;
    if (!cell->symbolic && gp.group.order())
      finite = checked_mul(finite, *gp.group.order());
    else
      all_finite = false;
    layers.push_back(gp.group);
    res.associated_graded.push_back(std::move(gp));
  }
  if (!res.truncated) res.finite_order = finite;
  if (cond_rule && cond_is_target) {
    // the named differential may hit this cell
    AbGroupExpr rest;
    AbGroupExpr hit;
    for (const auto& gp : res.associated_graded) {
      if (gp.p == cond_p && gp.q == cond_q)
        hit = gp.group;
      else
        rest = rest + gp.group;
    }
    std::optional<std::int64_t> ho = hit.order();
    bool prime = ho && *ho > 1;
    for (std::int64_t d = 2; prime && d * d <= *ho; ++d) prime = *ho % d != 0;
    res.conditional.push_back({cond_rule->name + " = 0", rest + hit});
    if (prime)
      res.conditional.push_back({cond_rule->name + " != 0", rest});
    else
      res.ambiguity.push_back(cond_rule->name + " != 0: quotient of " + hit.pretty() + " not determined");
    if (!cond_rule->meaning.empty()) res.assumptions.push_back(cond_rule->meaning);
  } else if (cond_rule && !cond_rule->meaning.empty()) {
    res.assumptions.push_back(cond_rule->meaning);
  }
  if (res.ambiguity.empty() && res.conditional.empty()) {
    if (layers.empty()) {
      res.group = AbGroupExpr::zero();
    } else if (layers.size() == 1) {
      res.group = layers.front();
    } else {
      bool coprime = all_finite;
      for (std::size_t i = 0; coprime && i < layers.size(); ++i)
        for (std::size_t j = i + 1; coprime && j < layers.size(); ++j)
          coprime = std::gcd(*layers[i].order(), *layers[j].order()) == 1;
      if (coprime) {
        AbGroupExpr g;
        for (const auto& l : layers) g = g + l;
        res.group = g;
      } else {
        res.ambiguity.push_back("extension of " + std::to_string(layers.size()) + " layers not resolved");
      }
    }
  } else if (layers.size() > 1) {
    res.ambiguity.push_back("extension of " + std::to_string(layers.size()) + " layers not resolved");
  }
  return res;
}

std::vector<std::vector<std::string>> page_cells(const Page& page, int columns) {
  if (columns < 0) columns = page.pmax + 1;
  std::vector<std::vector<std::string>> out;
  for (int q = page.min_q; q <= page.max_q; ++q) {
    std::vector<std::string> row;
    for (int p = 0; p < columns; ++p) row.push_back(page.has(p, q) ? page.at(p, q).render() : "⋯");
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

}  // namespace

std::string render_page(const Page& page, int columns) {
  auto cells = page_cells(page, columns);
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& c : row) width = std::max(width, display_width(c));
  width += 2;
  auto pad = [&](const std::string& s) { return s + std::string(width - display_width(s), ' '); };
  std::ostringstream os;
  os << "E" << page.r << "\n";
  for (int i = static_cast<int>(cells.size()) - 1; i >= 0; --i) {
    os << (page.min_q + i) << " | ";
    for (const auto& c : cells[i]) os << pad(c);
    os << "\n";
  }
  os << "    ";
  for (std::size_t p = 0; p < cells.front().size(); ++p) os << pad(std::to_string(p));
  os << "\n";
  return os.str();
}

AbGroupExpr h_bz2_cx(int degree) {
  if (degree < 0 || degree > 5) throw ValidationError("h_bz2_cx: degree 0..5");
  EMSpace e = em(2, 7);
  return cohomology(e.underlying, auto_qmodz(e.underlying, degree), degree).group;
}

WittRun witt_run(int pmax, int trunc, bool twisted) {
  EMSpace e = em(2, trunc);
  AhssBase b;
  b.cx = e.underlying;
  b.name = "K(Z2,2)";
  if (twisted) b.twist = e.fundamental;
  SpectrumDescriptor s = sw_spectrum();
  WittRun run;
  run.e2 = e2(b, s, pmax);
  run.e3 = turn_page(run.e2, b, s);
  return run;
}

}  // namespace ordcalc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordcalc/ahss.hpp"
#include "ordcalc/group.hpp"

namespace ordcalc {

// SH^n(X) from the AHSS over nerve(X), columns 0..n+1.
SHResult sh(const FiniteGroupoid& x, int n);
// SH^n(X) relative to a point: the pair (Cyl(X -> pt), X) in total degree n+1.
SHResult reduced_sh(const FiniteGroupoid& x, int n);

// The fermionic s-W (or SH) cohomology of BG with the Z2 1-form symmetry
// generated by eps, modelled as nerve(BG) x K(Z2,2) twisted by t when eps = id
// and as nerve(B(G/<eps>)) twisted by the extension class otherwise.
struct BosonicReport {
  SHResult unreduced;
  SHResult reduced;          // relative to the part over the base point
  AbGroupExpr ordinary;      // H^n(BG; C^x)
  std::vector<std::string> comparison;
  bool consistent = false;   // reduced agrees with `ordinary` up to flagged surplus
  std::string model;
  int truncation = 0;
};

enum class BosonicPreset { SH, SW };
BosonicReport sh_equivariant_bz2(const SuperGroup& sg, int n, BosonicPreset preset = BosonicPreset::SH);

// SH preset with the twisted rules Sq2 + w and (-1)^(Sq2 + w).
SpectrumDescriptor twisted_sh_spectrum();

// Degree-2 Z2 cocycle on nerve(B(G/<eps>)) from the extension data.
Cochain extension_cocycle(const SupergroupReport& rep, const SimplicialComplexTrunc& bq);

}  // namespace ordcalc

#pragma once

#include <string>
#include <vector>

#include "sfdga/dga.hpp"
#include "sfdga/tensor.hpp"

namespace sfdga {

// x_target -> scalar * x_target + shift, every other generator fixed.
struct ElementaryAuto {
  std::uint32_t target = 0;
  Coefficient scalar;
  NcPoly shift;
};

// Throws IllFormedAuto unless the scalar is a unit, the shift avoids the
// target generator and is homogeneous of the target's degree.
void check_well_formed(const ElementaryAuto& e, const SignaturePtr& sig);

NcPoly apply_elementary(const ElementaryAuto& e, const NcPoly& p);
ElementaryAuto invert_elementary(const ElementaryAuto& e);

// Elementary automorphisms of the source algebra applied left to right,
// followed by a degree-preserving relabeling source index -> target index.
struct TameIso {
  SignaturePtr source;
  SignaturePtr target;
  std::vector<ElementaryAuto> steps;
  std::vector<std::uint32_t> relabel;

  static TameIso identity(const SignaturePtr& sig);
};

// Throws IllFormedAuto for a bad step or relabeling.
void check_well_formed(const TameIso& t);

NcPoly apply_tame(const TameIso& t, const NcPoly& p);
TameIso invert_tame(const TameIso& t);

struct GeneratorResidual {
  std::string name;
  std::string residual;  // T(d_A g) - d_B(T g), printed
  bool ok = false;
};

struct MapReport {
  std::vector<std::string> problems;  // structural failures, e.g. "NoRelabelPossible: ..."
  std::vector<GeneratorResidual> generators;

  bool passed() const;
  std::string to_string() const;
};

// Checks T(d_A g) == d_B(T g) for every generator g of A.
MapReport verify_dga_map(const TameIso& t, const SemifreeDga& a, const SemifreeDga& b);

struct StableTameCertificate {
  std::vector<int> stabilizations_source;
  std::vector<int> stabilizations_target;
  TameIso iso;
};

SemifreeDga stabilize_all(const SemifreeDga& dga, const std::vector<int>& ks);

MapReport verify_stable_tame(const StableTameCertificate& c, const SemifreeDga& a, const SemifreeDga& b);

// Pushes the differential forward: d' = T o d_A o T^-1 on the target algebra.
SemifreeDga transport_dga(const SemifreeDga& a, const TameIso& t);

}  // namespace sfdga

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfdga/presentation.hpp"
#include "sfdga/tensor.hpp"

namespace sfdga {

// Sign convention used everywhere a derivation is extended from generators,
// and stamped into every emitted file.
inline constexpr std::string_view kLeibnizConvention = "d(ab) = d(a)*b + (-1)^|a| * a*d(b)";

// A tensor algebra plus the values of the differential on its generators.
class SemifreeDga {
 public:
  SemifreeDga(SignaturePtr sig, std::vector<NcPoly> differential);

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<NcPoly>& differentials() const { return differential_; }
  const NcPoly& differential(std::size_t generator) const { return differential_.at(generator); }
  const NcPoly& differential(std::string_view name) const;

  friend bool operator==(const SemifreeDga& a, const SemifreeDga& b) {
    return same_signature(a.sig_, b.sig_) && a.differential_ == b.differential_;
  }

 private:
  SignaturePtr sig_;
  std::vector<NcPoly> differential_;
};

// The unique degree -1 derivation extending the generator values.
NcPoly leibniz_extend(const SemifreeDga& dga, const NcPoly& p);

struct GeneratorCheck {
  std::string name;
  int degree = 0;
  bool degree_ok = false;   // d(g) homogeneous of degree |g| - 1, or zero
  bool square_zero = false;  // d(d(g)) == 0
  std::string differential;
  std::string square;
};

struct ValidationReport {
  std::vector<GeneratorCheck> generators;

  bool passed() const;
  std::string to_string() const;
};

ValidationReport validate(const SemifreeDga& dga);

// Appends e#i (degree k+1) and f#i (degree k) with d(e#i) = f#i, d(f#i) = 0.
SemifreeDga stabilize(const SemifreeDga& dga, int k);

// Degree-0 generators modulo the boundaries of the degree-1 generators.
// Throws NegativeDegreeGenerator if any generator has negative degree.
AlgebraPresentation h0_presentation(const SemifreeDga& dga);

struct Augmentation {
  std::vector<Coefficient> values;  // indexed like the signature
};

// epsilon vanishes off degree 0 and on every d(g).
bool check_augmentation(const SemifreeDga& dga, const Augmentation& eps);

}  // namespace sfdga

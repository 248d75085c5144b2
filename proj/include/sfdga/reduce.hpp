#pragma once

#include <string>
#include <vector>

#include "sfdga/dga.hpp"
#include "sfdga/presentation.hpp"

namespace sfdga {

// Formal inverse g' of a group generator g is the generator "<g>_inv".
std::string inverse_name(const std::string& generator);

// f_1..f_N over X = {g_1..g_n, g_1_inv..g_n_inv}, N = m + 2n: the relators
// r_j - 1 first, then g_i g_i' - 1 and g_i' g_i - 1 for each i.
struct RelationSystem {
  SignaturePtr signature;
  std::vector<NcPoly> relations;
};

RelationSystem group_relation_polys(const GroupPresentation& p, RingSpec ring);

struct DgaPair {
  SemifreeDga a;
  SemifreeDga b;
};

// Degree-0 x_i and degree-1 r_j; d_A(r_j) = f_j, d_B(r_j) = 1.
// Throws EmptyPresentation unless n, m >= 1.
DgaPair algebra_to_dgas(const AlgebraPresentation& p);

// Generators X (degree 0), y_1..y_N and z_x for x in X (degree 1).
// d_A: x -> 0, y_j -> f_j, z_x -> 0.  d_B: same except z_x -> x - 1.
DgaPair group_to_dgas(const GroupPresentation& p, RingSpec ring);

// Block sizes of a signature produced by group_to_dgas.
struct GroupDgaShape {
  std::size_t x_count = 0;
  std::size_t y_count = 0;

  std::uint32_t y(std::size_t j) const { return static_cast<std::uint32_t>(x_count + j); }
  std::uint32_t z(std::size_t i) const { return static_cast<std::uint32_t>(x_count + y_count + i); }
};

// Throws NotGroupReduction if the signature does not have the X, Y, Z layout.
GroupDgaShape group_dga_shape(const Signature& sig);

struct AugmentationPair {
  Augmentation a;
  Augmentation b;
};

// x -> 1 for x in X, 0 on Y and Z, for both algebras.
AugmentationPair canonical_augmentations(const SemifreeDga& a, const SemifreeDga& b);

}  // namespace sfdga

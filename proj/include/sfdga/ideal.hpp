#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sfdga/dga.hpp"
#include "sfdga/tensor.hpp"

namespace sfdga {

// One summand left * f_relation * right. `relation` is a 0-based index.
struct CofactorTriple {
  NcPoly left;
  std::size_t relation = 0;
  NcPoly right;
};

// sum_l left_l * f_{relation_l} * right_l
struct CofactorRep {
  std::vector<CofactorTriple> triples;
};

// Cofactors are restricted to words of length <= max_word_length.
struct SearchBound {
  unsigned max_word_length = 0;
};

// The R-span of { u * f_j * v : |u|, |v| <= D } kept in echelon form keyed by
// leading monomial. Over Z (and Z/n) the echelon is a lattice basis, so
// membership is decided over the integers, never over Q.
class BoundedIdeal {
 public:
  BoundedIdeal(SignaturePtr sig, std::vector<NcPoly> relations, SearchBound bound);
  ~BoundedIdeal();
  BoundedIdeal(BoundedIdeal&&) noexcept;
  BoundedIdeal& operator=(BoundedIdeal&&) noexcept;

  bool contains(const NcPoly& target) const;
  // Builds the cofactor-tracking echelon on first use.
  std::optional<CofactorRep> cofactors(const NcPoly& target) const;

  std::size_t column_count() const;
  std::size_t rank() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Tries bounds 0, 1, ..., bound.max_word_length and returns the first
// representation found, so the result uses the smallest sufficient bound.
// Every returned representation has been checked with verify_cofactors.
std::optional<CofactorRep> member_with_cofactors(const NcPoly& target, const std::vector<NcPoly>& relations,
                                                 SearchBound bound);

NcPoly expand_cofactors(const CofactorRep& rep, const std::vector<NcPoly>& relations);

// Throws IndexOutOfRange for a relation index past the end.
bool verify_cofactors(const CofactorRep& rep, const NcPoly& target, const std::vector<NcPoly>& relations);

// Replaces f_j by the generator relation_generators[j] inside a DGA whose
// degree-0 generators carry the cofactors' names: sum left * y_j * right.
NcPoly substitute_relation_generators(const CofactorRep& rep, const SemifreeDga& dga,
                                      const std::vector<std::uint32_t>& relation_generators);

// A degree-1 element u with d(u) = 1, built as sum p * y * q with y running
// over the degree-1 generators and p, q bounded degree-0 cofactors.
std::optional<NcPoly> acyclicity_witness(const SemifreeDga& dga, SearchBound bound);

// Indices of the degree-1 generators, in signature order.
std::vector<std::uint32_t> degree_one_generators(const Signature& sig);

}  // namespace sfdga

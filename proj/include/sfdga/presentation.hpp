#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfdga/tensor.hpp"

namespace sfdga {

struct GroupLetter {
  std::uint32_t generator = 0;
  bool inverse = false;

  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

using GroupWord = std::vector<GroupLetter>;

// Cancels adjacent g*g^-1 and g^-1*g pairs.
GroupWord free_reduce(const GroupWord& word);

// < g_1..g_n | r_1..r_m >, relators freely reduced.
struct GroupPresentation {
  std::string name = "G";
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  // Grammar form, e.g. "group G = < a, b | a*b*a^-1*b^-1 >".
  std::string to_string() const;
  std::string word_to_string(const GroupWord& word) const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// R<x_1..x_n> / (f_1..f_m). The signature holds the ring and the degree-0
// generators; relations live over that signature.
struct AlgebraPresentation {
  std::string name = "A";
  SignaturePtr signature;
  std::vector<NcPoly> relations;

  const RingSpec& ring() const { return signature->ring(); }
  std::string to_string() const;

  friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    return a.name == b.name && same_signature(a.signature, b.signature) && a.relations == b.relations;
  }
};

}  // namespace sfdga

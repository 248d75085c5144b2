#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sfdga/coeff.hpp"

namespace sfdga {

struct GeneratorSymbol {
  std::string name;
  int degree = 0;

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

// A monomial: a sequence of generator indices. The empty word is 1.
using Word = std::vector<std::uint32_t>;

// Length first, then lexicographic on generator indices.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size() * 0x9e3779b97f4a7c15ULL;
    for (auto letter : w) h = (h ^ letter) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

Word concat(const Word& a, const Word& b);

// Ring plus ordered generator list; the graded algebra T(x_1..x_n) over R.
class Signature {
 public:
  Signature(RingSpec ring, std::vector<GeneratorSymbol> generators);

  const RingSpec& ring() const { return ring_; }
  const std::vector<GeneratorSymbol>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const GeneratorSymbol& operator[](std::size_t i) const { return generators_[i]; }

  std::optional<std::uint32_t> index_of(std::string_view name) const;
  int degree(const Word& w) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.ring_ == b.ring_ && a.generators_ == b.generators_;
  }

 private:
  RingSpec ring_;
  std::vector<GeneratorSymbol> generators_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(RingSpec ring, std::vector<GeneratorSymbol> generators);
bool same_signature(const SignaturePtr& a, const SignaturePtr& b);
void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, std::string_view context);

// Result of homogeneous_degree: a degree, "any" for the zero polynomial, or
// nullopt (held by the optional wrapper) for mixed degrees.
struct AnyDegree {
  friend bool operator==(AnyDegree, AnyDegree) { return true; }
};
using HomogeneousDegree = std::variant<AnyDegree, int>;

// Sparse noncommutative polynomial in canonical form: no zero coefficients,
// terms keyed by WordLess.
class NcPoly {
 public:
  using Terms = std::map<Word, Coefficient, WordLess>;

  explicit NcPoly(SignaturePtr sig) : sig_(std::move(sig)) {}

  static NcPoly zero(SignaturePtr sig) { return NcPoly(std::move(sig)); }
  static NcPoly constant(SignaturePtr sig, const Coefficient& c);
  static NcPoly one(SignaturePtr sig);
  static NcPoly monomial(SignaturePtr sig, Word w, const Coefficient& c);
  static NcPoly monomial(SignaturePtr sig, Word w);
  static NcPoly generator(SignaturePtr sig, std::uint32_t index);
  // Looks the name up in the signature; throws UnknownGenerator.
  static NcPoly generator(SignaturePtr sig, std::string_view name);

  const SignaturePtr& signature() const { return sig_; }
  const RingSpec& ring() const { return sig_->ring(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const Word& w) const;
  std::size_t max_word_length() const;
  bool mentions(std::uint32_t generator) const;

  // Adds c*w in place.
  void add_term(const Word& w, const Coefficient& c);

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& b);
  NcPoly& operator-=(const NcPoly& b);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Coefficient& c, const NcPoly& p);

  friend bool operator==(const NcPoly& a, const NcPoly& b);

  // Canonical text: terms in descending WordLess order, runs printed as x^k.
  std::string to_string() const;

 private:
  SignaturePtr sig_;
  Terms terms_;
};

inline NcPoly poly_add(const NcPoly& a, const NcPoly& b) { return a + b; }
inline NcPoly poly_mul(const NcPoly& a, const NcPoly& b) { return a * b; }

std::optional<HomogeneousDegree> homogeneous_degree(const NcPoly& p);

// True when p is zero or homogeneous of exactly this degree.
bool is_homogeneous_of(const NcPoly& p, int degree);

// Algebra map determined by generator images; images[i] is the image of
// generator i of p's signature. Every image must share `target`.
NcPoly substitute(const NcPoly& p, std::span<const std::optional<NcPoly>> images,
                  const SignaturePtr& target);
NcPoly substitute(const NcPoly& p, std::span<const NcPoly> images, const SignaturePtr& target);

// Re-expresses p over another signature by generator name. Used to move
// polynomials between a DGA and its degree-0 part.
NcPoly rename_into(const NcPoly& p, const SignaturePtr& target);

// Ring-valued evaluation: each generator is sent to a scalar.
Coefficient evaluate(const NcPoly& p, std::span<const Coefficient> values);

std::string word_to_string(const Signature& sig, const Word& w);

}  // namespace sfdga

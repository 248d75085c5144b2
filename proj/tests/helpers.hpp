#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "sfdga/parse.hpp"
#include "sfdga/presentation.hpp"
#include "sfdga/tame.hpp"
#include "sfdga/tensor.hpp"

namespace sfdga::testing {

inline SignaturePtr sig_of(RingSpec ring, std::vector<GeneratorSymbol> gens) {
  return make_signature(ring, std::move(gens));
}

inline NcPoly P(const SignaturePtr& sig, const std::string& text) { return parse_poly(text, sig); }

// Random polynomial with up to `terms` terms, words of length <= max_len,
// small coefficients in [-3, 3].
inline NcPoly random_poly(std::mt19937& rng, const SignaturePtr& sig, int terms, int max_len) {
  NcPoly p(sig);
  if (sig->size() == 0) return p;
  std::uniform_int_distribution<int> nterms(0, terms), len(0, max_len), coef(-3, 3);
  std::uniform_int_distribution<std::uint32_t> letter(0, static_cast<std::uint32_t>(sig->size() - 1));
  for (int t = nterms(rng); t > 0; --t) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = letter(rng);
    p.add_term(w, Coefficient(sig->ring(), static_cast<long>(coef(rng))));
  }
  return p;
}

// Random polynomial whose every term has the given degree (no term if no
// word of that degree is hit).
inline NcPoly random_homogeneous(std::mt19937& rng, const SignaturePtr& sig, int degree, int terms, int max_len) {
  NcPoly p(sig);
  for (int attempt = 0; attempt < 20 * terms && static_cast<int>(p.size()) < terms; ++attempt) {
    NcPoly q = random_poly(rng, sig, 1, max_len);
    for (const auto& [w, c] : q.terms())
      if (sig->degree(w) == degree) p.add_term(w, c);
  }
  return p;
}

inline GroupPresentation random_group(std::mt19937& rng, int max_gens, int max_rels, int max_len) {
  std::uniform_int_distribution<int> ngens(0, max_gens), nrels(0, max_rels), len(0, max_len);
  GroupPresentation g;
  int n = ngens(rng);
  for (int i = 0; i < n; ++i) g.generators.push_back("g" + std::to_string(i + 1));
  if (n == 0) return g;
  std::uniform_int_distribution<int> gen(0, n - 1), coin(0, 1);
  for (int r = nrels(rng); r > 0; --r) {
    GroupWord w;
    for (int k = len(rng); k > 0; --k) w.push_back({static_cast<std::uint32_t>(gen(rng)), coin(rng) == 1});
    g.relators.push_back(free_reduce(w));
  }
  return g;
}

inline AlgebraPresentation random_algebra(std::mt19937& rng, RingSpec ring, int max_gens, int max_rels,
                                          int max_len) {
  std::uniform_int_distribution<int> ngens(1, max_gens), nrels(1, max_rels);
  std::vector<GeneratorSymbol> gens;
  for (int i = ngens(rng); i > 0; --i) gens.push_back({"x" + std::to_string(gens.size() + 1), 0});
  AlgebraPresentation a;
  a.signature = make_signature(ring, std::move(gens));
  for (int j = nrels(rng); j > 0; --j) a.relations.push_back(random_poly(rng, a.signature, 3, max_len));
  return a;
}

inline NcPoly drop_target(const NcPoly& p, std::uint32_t target) {
  NcPoly out(p.signature());
  for (const auto& [w, c] : p.terms())
    if (std::find(w.begin(), w.end(), target) == w.end()) out.add_term(w, c);
  return out;
}

// x_i -> alpha x_i + P with a random unit alpha and a random shift of the
// right degree that avoids x_i.
inline ElementaryAuto random_elementary(std::mt19937& rng, const SignaturePtr& sig) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(sig->size() - 1));
  std::uint32_t i = pick(rng);
  const RingSpec& ring = sig->ring();
  long raw = std::uniform_int_distribution<long>(-3, 3)(rng);
  Coefficient alpha(ring, raw == 0 ? 1L : raw);
  if (!alpha.is_unit()) alpha = Coefficient(ring, raw < 0 ? -1L : 1L);
  NcPoly shift = drop_target(random_homogeneous(rng, sig, (*sig)[i].degree, 3, 3), i);
  return ElementaryAuto{i, alpha, shift};
}

inline TameIso random_tame(std::mt19937& rng, const SignaturePtr& sig, int steps) {
  TameIso t = TameIso::identity(sig);
  for (int s = 0; s < steps; ++s) t.steps.push_back(random_elementary(rng, sig));
  return t;
}

}  // namespace sfdga::testing

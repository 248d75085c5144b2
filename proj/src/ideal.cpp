#include "sfdga/ideal.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "sfdga/error.hpp"

namespace sfdga {

namespace {

// Sparse vectors are sorted by strictly decreasing key, so the leading
// monomial (highest rank) sits at the front.
template <class S>
using SparseVec = std::vector<std::pair<std::uint32_t, S>>;

// Coefficient arithmetic used by the echelon. `claim` handles a leading
// monomial that has no row yet; `exact_div` and `xgcd` handle one that has.
struct IntegerArith {
  using Scalar = mpz_class;
  struct Claim {
    Scalar row_multiplier;
    std::optional<Scalar> rest_multiplier;
  };
  struct Gcd {
    Scalar h, s, t, c_over_h, g_over_h;
  };

  Scalar from(const Coefficient& c) const { return c.value().get_num(); }
  mpq_class to_rational(const Scalar& s) const { return mpq_class(s); }
  Scalar one() const { return 1; }
  bool is_zero(const Scalar& s) const { return s == 0; }
  Scalar neg(const Scalar& s) const { return -s; }
  Scalar lin(const Scalar& a, const Scalar& x, const Scalar& b, const Scalar& y) const { return a * x + b * y; }
  Scalar mul(const Scalar& a, const Scalar& x) const { return a * x; }
  Claim claim(const Scalar& c) const { return {c < 0 ? Scalar(-1) : Scalar(1), std::nullopt}; }
  std::optional<Scalar> exact_div(const Scalar& c, const Scalar& g) const {
    if (mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t()) == 0) return std::nullopt;
    Scalar q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return q;
  }
  Gcd xgcd(const Scalar& g, const Scalar& c) const {
    Gcd r;
    mpz_gcdext(r.h.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    r.c_over_h = c / r.h;
    r.g_over_h = g / r.h;
    return r;
  }
};

struct RationalArith {
  using Scalar = mpq_class;
  struct Claim {
    Scalar row_multiplier;
    std::optional<Scalar> rest_multiplier;
  };
  struct Gcd {
    Scalar h, s, t, c_over_h, g_over_h;
  };

  Scalar from(const Coefficient& c) const { return c.value(); }
  mpq_class to_rational(const Scalar& s) const { return s; }
  Scalar one() const { return 1; }
  bool is_zero(const Scalar& s) const { return s == 0; }
  Scalar neg(const Scalar& s) const { return -s; }
  Scalar lin(const Scalar& a, const Scalar& x, const Scalar& b, const Scalar& y) const { return a * x + b * y; }
  Scalar mul(const Scalar& a, const Scalar& x) const { return a * x; }
  Claim claim(const Scalar& c) const { return {Scalar(1) / c, std::nullopt}; }
  std::optional<Scalar> exact_div(const Scalar& c, const Scalar& g) const { return Scalar(c / g); }
  Gcd xgcd(const Scalar&, const Scalar&) const { throw Error(ErrorKind::InternalVerificationFailure, "xgcd over Q"); }
};

// Z/n as the lattice Z^M + n*Z^M: every monomial carries an implicit row
// n*e_m until a real row claims it, so composite n is handled exactly.
struct ModularArith {
  using Scalar = std::uint64_t;
  using Wide = unsigned __int128;
  struct Claim {
    Scalar row_multiplier;
    std::optional<Scalar> rest_multiplier;
  };
  struct Gcd {
    Scalar h, s, t, c_over_h, g_over_h;
  };

  std::uint64_t n;

  Scalar from(const Coefficient& c) const { return c.value().get_num().get_ui(); }
  mpq_class to_rational(const Scalar& s) const { return mpq_class(mpz_class(static_cast<unsigned long>(s))); }
  Scalar one() const { return 1 % n; }
  bool is_zero(const Scalar& s) const { return s == 0; }
  Scalar neg(const Scalar& s) const { return s == 0 ? 0 : n - s; }
  Scalar lin(const Scalar& a, const Scalar& x, const Scalar& b, const Scalar& y) const {
    Wide r = (Wide(a) * x) % n + (Wide(b) * y) % n;
    return static_cast<Scalar>(r % n);
  }
  Scalar mul(const Scalar& a, const Scalar& x) const { return static_cast<Scalar>((Wide(a) * x) % n); }

  // s*a + t*b = gcd(a, b) over the integers, s and t reduced mod n.
  Gcd ext(Scalar a, Scalar b) const {
    __int128 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    auto reduce = [&](__int128 v) {
      __int128 m = v % static_cast<__int128>(n);
      if (m < 0) m += n;
      return static_cast<Scalar>(m);
    };
    Gcd g;
    g.h = static_cast<Scalar>(r0);
    g.s = reduce(s0);
    g.t = reduce(t0);
    g.g_over_h = a / g.h;
    g.c_over_h = b / g.h;
    return g;
  }

  Claim claim(const Scalar& c) const {
    Gcd g = ext(c, n);  // s*c + t*n = h
    if (g.h == 1) return {g.s, std::nullopt};
    return {g.s, neg(n / g.h)};
  }
  std::optional<Scalar> exact_div(const Scalar& c, const Scalar& g) const {
    if (c % g != 0) return std::nullopt;
    return c / g;
  }
  Gcd xgcd(const Scalar& g, const Scalar& c) const {
    return ext(g, c);
  }
};

template <class A>
class Echelon {
 public:
  using S = typename A::Scalar;
  using Vec = SparseVec<S>;

  Echelon(A arith, std::size_t monomials, bool track) : arith_(arith), rows_(monomials), track_(track) {}

  void insert(Vec v, Vec combo) {
    while (!v.empty()) {
      auto lead = v.front().first;
      S c = v.front().second;
      auto& slot = rows_[lead];
      if (!slot) {
        auto claim = arith_.claim(c);
        Row row{scale(claim.row_multiplier, v), track_ ? scale(claim.row_multiplier, combo) : Vec{}};
        if (claim.rest_multiplier) {
          v = scale(*claim.rest_multiplier, v);
          if (track_) combo = scale(*claim.rest_multiplier, combo);
        } else {
          v.clear();
        }
        slot = std::move(row);
        ++rank_;
        continue;
      }
      const S& g = slot->vec.front().second;
      if (auto q = arith_.exact_div(c, g)) {
        S minus_q = arith_.neg(*q);
        v = combine(arith_.one(), v, minus_q, slot->vec);
        if (track_) combo = combine(arith_.one(), combo, minus_q, slot->combo);
        continue;
      }
      auto gcd = arith_.xgcd(g, c);
      // [row'; v'] = [s t; c/h -g/h] [row; v], a unimodular change of basis.
      Vec new_row = combine(gcd.s, slot->vec, gcd.t, v);
      Vec new_v = combine(gcd.c_over_h, slot->vec, arith_.neg(gcd.g_over_h), v);
      if (track_) {
        Vec new_row_combo = combine(gcd.s, slot->combo, gcd.t, combo);
        combo = combine(gcd.c_over_h, slot->combo, arith_.neg(gcd.g_over_h), combo);
        slot->combo = std::move(new_row_combo);
      }
      slot->vec = std::move(new_row);
      v = std::move(new_v);
    }
  }

  // Reduces v to zero if it lies in the span; `combo` receives the
  // coefficients on the inserted columns.
  bool reduce(Vec v, Vec* combo) const {
    while (!v.empty()) {
      auto lead = v.front().first;
      const auto& slot = rows_[lead];
      if (!slot) return false;
      auto q = arith_.exact_div(v.front().second, slot->vec.front().second);
      if (!q) return false;
      v = combine(arith_.one(), v, arith_.neg(*q), slot->vec);
      if (combo) *combo = combine(arith_.one(), *combo, *q, slot->combo);
    }
    return true;
  }

  std::size_t rank() const { return rank_; }

 private:
  struct Row {
    Vec vec;
    Vec combo;
  };

  Vec scale(const S& a, const Vec& x) const {
    Vec out;
    out.reserve(x.size());
    for (const auto& [k, s] : x) {
      S r = arith_.mul(a, s);
      if (!arith_.is_zero(r)) out.emplace_back(k, std::move(r));
    }
    return out;
  }

  Vec combine(const S& a, const Vec& x, const S& b, const Vec& y) const {
    Vec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      S r;
      std::uint32_t key;
      if (j == y.size() || (i < x.size() && x[i].first > y[j].first)) {
        key = x[i].first;
        r = arith_.mul(a, x[i++].second);
      } else if (i == x.size() || y[j].first > x[i].first) {
        key = y[j].first;
        r = arith_.mul(b, y[j++].second);
      } else {
        key = x[i].first;
        r = arith_.lin(a, x[i].second, b, y[j].second);
        ++i;
        ++j;
      }
      if (!arith_.is_zero(r)) out.emplace_back(key, std::move(r));
    }
    return out;
  }

  A arith_;
  std::vector<std::optional<Row>> rows_;
  bool track_;
  std::size_t rank_ = 0;
};

struct Column {
  Word left;
  std::uint32_t relation;
  Word right;
};

// All words of length <= max_length over `letters` generators, WordLess order.
std::vector<Word> words_up_to(std::uint32_t letters, unsigned max_length) {
  std::vector<Word> out{Word{}};
  if (letters == 0) return out;
  for (unsigned len = 1; len <= max_length; ++len) {
    Word w(len, 0);
    while (true) {
      out.push_back(w);
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] + 1 == letters) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
  return out;
}

// Monomial ranks and the ordered column list shared by both echelons.
struct Layout {
  std::vector<Column> columns;
  std::unordered_map<Word, std::uint32_t, WordHash> rank;
  std::size_t monomials = 0;
};

Layout make_layout(const Signature& sig, const std::vector<NcPoly>& relations, unsigned bound) {
  Layout layout;
  auto words = words_up_to(static_cast<std::uint32_t>(sig.size()), bound);
  std::vector<std::vector<const Word*>> by_length(bound + 1);
  for (const auto& w : words) by_length[w.size()].push_back(&w);

  // Column order: total cofactor length, then right length, then left word,
  // relation, right word.
  for (unsigned total = 0; total <= 2 * bound; ++total) {
    for (unsigned right_len = 0; right_len <= std::min(total, bound); ++right_len) {
      unsigned left_len = total - right_len;
      if (left_len > bound) continue;
      for (const Word* u : by_length[left_len])
        for (std::uint32_t j = 0; j < relations.size(); ++j) {
          if (relations[j].is_zero()) continue;
          for (const Word* v : by_length[right_len]) layout.columns.push_back({*u, j, *v});
        }
    }
  }

  std::unordered_set<Word, WordHash> seen;
  for (const auto& col : layout.columns)
    for (const auto& [w, c] : relations[col.relation].terms()) seen.insert(concat(concat(col.left, w), col.right));
  std::vector<Word> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), WordLess{});
  layout.rank.reserve(sorted.size());
  for (std::uint32_t i = 0; i < sorted.size(); ++i) layout.rank.emplace(std::move(sorted[i]), i);
  layout.monomials = sorted.size();
  return layout;
}

struct EngineBase {
  virtual ~EngineBase() = default;
  virtual bool contains(const NcPoly& target) const = 0;
  // Column index -> coefficient, or nullopt when not a member.
  virtual std::optional<std::vector<std::pair<std::uint32_t, mpq_class>>> combination(const NcPoly& target) const = 0;
  virtual std::size_t rank() const = 0;
};

template <class A>
class Engine final : public EngineBase {
 public:
  using S = typename A::Scalar;
  using Vec = SparseVec<S>;

  Engine(A arith, const Layout& layout, const std::vector<NcPoly>& relations)
      : arith_(arith), layout_(layout), relations_(relations), untracked_(arith, layout.monomials, false) {
    build(untracked_, false);
  }

  bool contains(const NcPoly& target) const override {
    auto v = to_vec(target);
    return v && untracked_.reduce(std::move(*v), nullptr);
  }

  std::optional<std::vector<std::pair<std::uint32_t, mpq_class>>> combination(const NcPoly& target) const override {
    auto v = to_vec(target);
    if (!v || !untracked_.reduce(*v, nullptr)) return std::nullopt;
    if (!tracked_) {
      tracked_.emplace(arith_, layout_.monomials, true);
      build(*tracked_, true);
    }
    Vec combo;
    if (!tracked_->reduce(std::move(*v), &combo))
      throw Error(ErrorKind::InternalVerificationFailure, "tracked and untracked echelons disagree");
    std::vector<std::pair<std::uint32_t, mpq_class>> out;
    out.reserve(combo.size());
    for (auto it = combo.rbegin(); it != combo.rend(); ++it) out.emplace_back(it->first, arith_.to_rational(it->second));
    return out;
  }

  std::size_t rank() const override { return untracked_.rank(); }

 private:
  std::optional<Vec> to_vec(const NcPoly& p) const {
    Vec v;
    v.reserve(p.size());
    for (const auto& [w, c] : p.terms()) {
      auto it = layout_.rank.find(w);
      if (it == layout_.rank.end()) return std::nullopt;
      v.emplace_back(it->second, arith_.from(c));
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return v;
  }

  void build(Echelon<A>& echelon, bool track) const {
    std::vector<std::vector<std::pair<const Word*, S>>> rel_terms(relations_.size());
    for (std::size_t j = 0; j < relations_.size(); ++j)
      for (const auto& [w, c] : relations_[j].terms()) rel_terms[j].emplace_back(&w, arith_.from(c));
    for (std::uint32_t k = 0; k < layout_.columns.size(); ++k) {
      const auto& col = layout_.columns[k];
      Vec v;
      v.reserve(rel_terms[col.relation].size());
      for (const auto& [w, s] : rel_terms[col.relation])
        v.emplace_back(layout_.rank.at(concat(concat(col.left, *w), col.right)), s);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      Vec combo;
      if (track) combo.emplace_back(k, arith_.one());
      echelon.insert(std::move(v), std::move(combo));
    }
  }

  A arith_;
  const Layout& layout_;
  const std::vector<NcPoly>& relations_;
  Echelon<A> untracked_;
  mutable std::optional<Echelon<A>> tracked_;
};

struct SlotLess {
  bool operator()(const std::pair<std::uint32_t, Word>& a, const std::pair<std::uint32_t, Word>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return WordLess{}(a.second, b.second);
  }
};

}  // namespace

struct BoundedIdeal::Impl {
  SignaturePtr sig;
  std::vector<NcPoly> relations;
  SearchBound bound;
  Layout layout;
  std::unique_ptr<EngineBase> engine;
};

BoundedIdeal::BoundedIdeal(SignaturePtr sig, std::vector<NcPoly> relations, SearchBound bound)
    : impl_(std::make_unique<Impl>()) {
  for (const auto& f : relations) require_same_signature(f.signature(), sig, "ideal relation");
  impl_->sig = std::move(sig);
  impl_->relations = std::move(relations);
  impl_->bound = bound;
  impl_->layout = make_layout(*impl_->sig, impl_->relations, bound.max_word_length);
  const auto& ring = impl_->sig->ring();
  switch (ring.kind()) {
    case RingKind::Integers:
      impl_->engine = std::make_unique<Engine<IntegerArith>>(IntegerArith{}, impl_->layout, impl_->relations);
      break;
    case RingKind::Rationals:
      impl_->engine = std::make_unique<Engine<RationalArith>>(RationalArith{}, impl_->layout, impl_->relations);
      break;
    case RingKind::IntegersMod:
      impl_->engine =
          std::make_unique<Engine<ModularArith>>(ModularArith{ring.modulus()}, impl_->layout, impl_->relations);
      break;
  }
}

BoundedIdeal::~BoundedIdeal() = default;
BoundedIdeal::BoundedIdeal(BoundedIdeal&&) noexcept = default;
BoundedIdeal& BoundedIdeal::operator=(BoundedIdeal&&) noexcept = default;

bool BoundedIdeal::contains(const NcPoly& target) const {
  require_same_signature(target.signature(), impl_->sig, "ideal target");
  return target.is_zero() || impl_->engine->contains(target);
}

std::optional<CofactorRep> BoundedIdeal::cofactors(const NcPoly& target) const {
  require_same_signature(target.signature(), impl_->sig, "ideal target");
  if (target.is_zero()) return CofactorRep{};
  auto combo = impl_->engine->combination(target);
  if (!combo) return std::nullopt;

  const auto& sig = impl_->sig;
  const auto ring = sig->ring();
  // Group columns sharing (relation, right word) into one left cofactor.
  std::map<std::pair<std::uint32_t, Word>, NcPoly, SlotLess> grouped;
  for (const auto& [k, q] : *combo) {
    const auto& col = impl_->layout.columns[k];
    auto [it, inserted] = grouped.try_emplace({col.relation, col.right}, NcPoly(sig));
    it->second.add_term(col.left, Coefficient(ring, q));
  }
  CofactorRep rep;
  for (auto& [key, left] : grouped) {
    if (left.is_zero()) continue;
    rep.triples.push_back({std::move(left), key.first, NcPoly::monomial(sig, key.second)});
  }
  if (!verify_cofactors(rep, target, impl_->relations))
    throw Error(ErrorKind::InternalVerificationFailure, "cofactor representation does not expand to the target");
  return rep;
}

std::size_t BoundedIdeal::column_count() const { return impl_->layout.columns.size(); }
std::size_t BoundedIdeal::rank() const { return impl_->engine->rank(); }

std::optional<CofactorRep> member_with_cofactors(const NcPoly& target, const std::vector<NcPoly>& relations,
                                                 SearchBound bound) {
  for (const auto& f : relations) require_same_signature(f.signature(), target.signature(), "ideal relation");
  if (target.is_zero()) return CofactorRep{};
  for (unsigned d = 0; d <= bound.max_word_length; ++d) {
    BoundedIdeal ideal(target.signature(), relations, SearchBound{d});
    if (auto rep = ideal.cofactors(target)) return rep;
  }
  return std::nullopt;
}

NcPoly expand_cofactors(const CofactorRep& rep, const std::vector<NcPoly>& relations) {
  if (rep.triples.empty()) {
    if (relations.empty()) throw Error(ErrorKind::InvalidArgument, "cannot expand an empty sum without a signature");
    return NcPoly::zero(relations.front().signature());
  }
  NcPoly total(rep.triples.front().left.signature());
  for (const auto& t : rep.triples) {
    if (t.relation >= relations.size())
      throw Error(ErrorKind::IndexOutOfRange, "relation index " + std::to_string(t.relation + 1));
    total += t.left * relations[t.relation] * t.right;
  }
  return total;
}

bool verify_cofactors(const CofactorRep& rep, const NcPoly& target, const std::vector<NcPoly>& relations) {
  for (const auto& t : rep.triples)
    if (t.relation >= relations.size())
      throw Error(ErrorKind::IndexOutOfRange, "relation index " + std::to_string(t.relation + 1));
  if (rep.triples.empty()) return target.is_zero();
  try {
    return expand_cofactors(rep, relations) == target;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SignatureMismatch || e.kind() == ErrorKind::MixedRings) return false;
    throw;
  }
}

std::vector<std::uint32_t> degree_one_generators(const Signature& sig) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < sig.size(); ++i)
    if (sig[i].degree == 1) out.push_back(i);
  return out;
}

NcPoly substitute_relation_generators(const CofactorRep& rep, const SemifreeDga& dga,
                                      const std::vector<std::uint32_t>& relation_generators) {
  const auto& sig = dga.signature();
  NcPoly w(sig);
  for (const auto& t : rep.triples) {
    if (t.relation >= relation_generators.size())
      throw Error(ErrorKind::IndexOutOfRange, "relation index " + std::to_string(t.relation + 1));
    w += rename_into(t.left, sig) * NcPoly::generator(sig, relation_generators[t.relation]) *
         rename_into(t.right, sig);
  }
  return w;
}

std::optional<NcPoly> acyclicity_witness(const SemifreeDga& dga, SearchBound bound) {
  AlgebraPresentation h0 = h0_presentation(dga);
  auto rep = member_with_cofactors(NcPoly::one(h0.signature), h0.relations, bound);
  if (!rep) return std::nullopt;
  NcPoly u = substitute_relation_generators(*rep, dga, degree_one_generators(*dga.signature()));
  if (!(leibniz_extend(dga, u) == NcPoly::one(dga.signature())))
    throw Error(ErrorKind::InternalVerificationFailure, "acyclicity witness does not bound 1");
  return u;
}

}  // namespace sfdga

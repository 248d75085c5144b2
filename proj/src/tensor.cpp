#include "sfdga/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "sfdga/error.hpp"

namespace sfdga {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Signature::Signature(RingSpec ring, std::vector<GeneratorSymbol> generators)
    : ring_(ring), generators_(std::move(generators)) {
  for (std::uint32_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name.empty())
      throw Error(ErrorKind::InvalidArgument, "empty generator name");
    if (!index_.emplace(generators_[i].name, i).second)
      throw Error(ErrorKind::DuplicateGenerator, generators_[i].name);
  }
}

std::optional<std::uint32_t> Signature::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Signature::degree(const Word& w) const {
  int d = 0;
  for (auto letter : w) d += generators_[letter].degree;
  return d;
}

SignaturePtr make_signature(RingSpec ring, std::vector<GeneratorSymbol> generators) {
  return std::make_shared<const Signature>(ring, std::move(generators));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_signature(const SignaturePtr& a, const SignaturePtr& b, std::string_view context) {
  if (!same_signature(a, b)) throw Error(ErrorKind::SignatureMismatch, std::string(context));
}

NcPoly NcPoly::constant(SignaturePtr sig, const Coefficient& c) {
  return monomial(std::move(sig), Word{}, c);
}

NcPoly NcPoly::one(SignaturePtr sig) {
  auto ring = sig->ring();
  return constant(std::move(sig), Coefficient::one(ring));
}

NcPoly NcPoly::monomial(SignaturePtr sig, Word w, const Coefficient& c) {
  NcPoly p(std::move(sig));
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::monomial(SignaturePtr sig, Word w) {
  auto ring = sig->ring();
  return monomial(std::move(sig), std::move(w), Coefficient::one(ring));
}

NcPoly NcPoly::generator(SignaturePtr sig, std::uint32_t index) {
  if (index >= sig->size()) throw Error(ErrorKind::IndexOutOfRange, "generator index");
  return monomial(std::move(sig), Word{index});
}

NcPoly NcPoly::generator(SignaturePtr sig, std::string_view name) {
  auto index = sig->index_of(name);
  if (!index) throw Error(ErrorKind::UnknownGenerator, std::string(name));
  return generator(std::move(sig), *index);
}

Coefficient NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coefficient::zero(ring()) : it->second;
}

std::size_t NcPoly::max_word_length() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

bool NcPoly::mentions(std::uint32_t generator) const {
  for (const auto& [w, c] : terms_)
    if (std::find(w.begin(), w.end(), generator) != w.end()) return true;
  return false;
}

void NcPoly::add_term(const Word& w, const Coefficient& c) {
  if (c.is_zero()) return;
  for (auto letter : w)
    if (letter >= sig_->size()) throw Error(ErrorKind::IndexOutOfRange, "letter outside signature");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly r(sig_);
  for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& b) {
  require_same_signature(sig_, b.sig_, "poly_add");
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& b) {
  require_same_signature(sig_, b.sig_, "poly_sub");
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  require_same_signature(a.sig_, b.sig_, "poly_mul");
  NcPoly r(a.sig_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

NcPoly operator*(const Coefficient& c, const NcPoly& p) {
  NcPoly r(p.sig_);
  for (const auto& [w, pc] : p.terms_) r.add_term(w, c * pc);
  return r;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
}

std::string word_to_string(const Signature& sig, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += sig[w[i]].name;
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    bool negative = c.is_negative();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpq_class magnitude = abs(c.value());
    if (w.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += word_to_string(*sig_, w);
    }
  }
  return out;
}

std::optional<HomogeneousDegree> homogeneous_degree(const NcPoly& p) {
  if (p.is_zero()) return HomogeneousDegree{AnyDegree{}};
  const auto& sig = *p.signature();
  std::optional<int> degree;
  for (const auto& [w, c] : p.terms()) {
    int d = sig.degree(w);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return HomogeneousDegree{*degree};
}

bool is_homogeneous_of(const NcPoly& p, int degree) {
  auto h = homogeneous_degree(p);
  if (!h) return false;
  if (std::holds_alternative<AnyDegree>(*h)) return true;
  return std::get<int>(*h) == degree;
}

NcPoly substitute(const NcPoly& p, std::span<const std::optional<NcPoly>> images,
                  const SignaturePtr& target) {
  if (images.size() != p.signature()->size())
    throw Error(ErrorKind::MissingImage, "image table size does not match signature");
  if (!(p.ring() == target->ring())) throw Error(ErrorKind::MixedRings, "substitute");
  for (const auto& image : images)
    if (image) require_same_signature(image->signature(), target, "substitute image");

  NcPoly result(target);
  for (const auto& [w, c] : p.terms()) {
    NcPoly term = NcPoly::constant(target, c);
    for (auto letter : w) {
      if (!images[letter])
        throw Error(ErrorKind::MissingImage, (*p.signature())[letter].name);
      term = term * *images[letter];
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

NcPoly substitute(const NcPoly& p, std::span<const NcPoly> images, const SignaturePtr& target) {
  std::vector<std::optional<NcPoly>> wrapped(images.begin(), images.end());
  return substitute(p, wrapped, target);
}

NcPoly rename_into(const NcPoly& p, const SignaturePtr& target) {
  const auto& source = *p.signature();
  if (!(source.ring() == target->ring())) throw Error(ErrorKind::MixedRings, "rename_into");
  std::vector<std::optional<std::uint32_t>> map(source.size());
  for (std::uint32_t i = 0; i < source.size(); ++i) map[i] = target->index_of(source[i].name);
  NcPoly r(target);
  for (const auto& [w, c] : p.terms()) {
    Word out;
    out.reserve(w.size());
    for (auto letter : w) {
      if (!map[letter]) throw Error(ErrorKind::MissingImage, source[letter].name);
      out.push_back(*map[letter]);
    }
    r.add_term(out, c);
  }
  return r;
}

Coefficient evaluate(const NcPoly& p, std::span<const Coefficient> values) {
  if (values.size() != p.signature()->size())
    throw Error(ErrorKind::MissingValue, "evaluation table size does not match signature");
  Coefficient total = Coefficient::zero(p.ring());
  for (const auto& [w, c] : p.terms()) {
    Coefficient term = c;
    for (auto letter : w) term *= values[letter];
    total += term;
  }
  return total;
}

}  // namespace sfdga

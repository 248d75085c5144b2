#include "sfdga/tame.hpp"

#include <algorithm>
#include <sstream>

#include "sfdga/error.hpp"

namespace sfdga {

void check_well_formed(const ElementaryAuto& e, const SignaturePtr& sig) {
  if (e.target >= sig->size()) throw Error(ErrorKind::IllFormedAuto, "target index out of range");
  const auto& name = (*sig)[e.target].name;
  if (!(e.scalar.ring() == sig->ring())) throw Error(ErrorKind::IllFormedAuto, name + ": scalar ring mismatch");
  if (!e.scalar.is_unit())
    throw Error(ErrorKind::IllFormedAuto, name + ": scalar " + e.scalar.to_string() + " is not a unit");
  if (!same_signature(e.shift.signature(), sig))
    throw Error(ErrorKind::IllFormedAuto, name + ": shift lives in another signature");
  if (e.shift.mentions(e.target))
    throw Error(ErrorKind::IllFormedAuto, name + ": shift " + e.shift.to_string() + " mentions " + name);
  if (!is_homogeneous_of(e.shift, (*sig)[e.target].degree))
    throw Error(ErrorKind::IllFormedAuto, name + ": shift " + e.shift.to_string() + " is not homogeneous of degree " +
                                              std::to_string((*sig)[e.target].degree));
}

NcPoly apply_elementary(const ElementaryAuto& e, const NcPoly& p) {
  const auto& sig = p.signature();
  check_well_formed(e, sig);
  if (!p.mentions(e.target)) return p;
  std::vector<NcPoly> images;
  images.reserve(sig->size());
  for (std::uint32_t i = 0; i < sig->size(); ++i) images.push_back(NcPoly::generator(sig, i));
  images[e.target] = e.scalar * images[e.target] + e.shift;
  return substitute(p, images, sig);
}

ElementaryAuto invert_elementary(const ElementaryAuto& e) {
  check_well_formed(e, e.shift.signature());
  Coefficient inv = e.scalar.unit_inverse();
  return ElementaryAuto{e.target, inv, -(inv * e.shift)};
}

TameIso TameIso::identity(const SignaturePtr& sig) {
  TameIso t{sig, sig, {}, {}};
  t.relabel.resize(sig->size());
  for (std::uint32_t i = 0; i < sig->size(); ++i) t.relabel[i] = i;
  return t;
}

namespace {

std::vector<int> degree_multiset(const Signature& sig) {
  std::vector<int> d;
  for (const auto& g : sig.generators()) d.push_back(g.degree);
  std::sort(d.begin(), d.end());
  return d;
}

void check_relabel(const TameIso& t) {
  const auto& src = *t.source;
  const auto& dst = *t.target;
  if (!(src.ring() == dst.ring())) throw Error(ErrorKind::IllFormedAuto, "source and target rings differ");
  if (degree_multiset(src) != degree_multiset(dst))
    throw Error(ErrorKind::IllFormedAuto, "NoRelabelPossible: generator degree multisets differ");
  if (t.relabel.size() != src.size()) throw Error(ErrorKind::IllFormedAuto, "relabel is not total");
  std::vector<bool> hit(dst.size(), false);
  for (std::uint32_t i = 0; i < src.size(); ++i) {
    auto j = t.relabel[i];
    if (j >= dst.size() || hit[j]) throw Error(ErrorKind::IllFormedAuto, "relabel is not a bijection");
    hit[j] = true;
    if (src[i].degree != dst[j].degree)
      throw Error(ErrorKind::IllFormedAuto, "relabel " + src[i].name + " -> " + dst[j].name + " changes degree");
  }
}

NcPoly relabel_poly(const NcPoly& p, const std::vector<std::uint32_t>& relabel, const SignaturePtr& target) {
  NcPoly r(target);
  for (const auto& [w, c] : p.terms()) {
    Word out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [&](std::uint32_t letter) { return relabel[letter]; });
    r.add_term(out, c);
  }
  return r;
}

}  // namespace

void check_well_formed(const TameIso& t) {
  if (!t.source || !t.target) throw Error(ErrorKind::IllFormedAuto, "missing signature");
  check_relabel(t);
  for (const auto& e : t.steps) check_well_formed(e, t.source);
}

NcPoly apply_tame(const TameIso& t, const NcPoly& p) {
  require_same_signature(p.signature(), t.source, "apply_tame");
  check_relabel(t);
  NcPoly image = p;
  for (const auto& e : t.steps) image = apply_elementary(e, image);
  return relabel_poly(image, t.relabel, t.target);
}

TameIso invert_tame(const TameIso& t) {
  check_well_formed(t);
  TameIso inv{t.target, t.source, {}, std::vector<std::uint32_t>(t.relabel.size())};
  for (std::uint32_t i = 0; i < t.relabel.size(); ++i) inv.relabel[t.relabel[i]] = i;
  // T = rho o e_k o ... o e_1, so T^-1 = rho^-1 o (rho e_1^-1 rho^-1) o ... o (rho e_k^-1 rho^-1).
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
    ElementaryAuto e = invert_elementary(*it);
    inv.steps.push_back(ElementaryAuto{t.relabel[e.target], e.scalar, relabel_poly(e.shift, t.relabel, t.target)});
  }
  return inv;
}

bool MapReport::passed() const {
  if (!problems.empty()) return false;
  return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.ok; });
}

std::string MapReport::to_string() const {
  std::ostringstream out;
  for (const auto& p : problems) out << "FAIL " << p << '\n';
  for (const auto& g : generators) {
    out << (g.ok ? "ok   " : "FAIL ") << g.name;
    if (!g.ok) out << ": residual " << g.residual;
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

MapReport verify_dga_map(const TameIso& t, const SemifreeDga& a, const SemifreeDga& b) {
  MapReport report;
  if (!t.source || !same_signature(t.source, a.signature())) {
    report.problems.push_back("SignatureMismatch: map source differs from the source DGA");
    return report;
  }
  if (!t.target || !same_signature(t.target, b.signature())) {
    report.problems.push_back("SignatureMismatch: map target differs from the target DGA");
    return report;
  }
  try {
    check_well_formed(t);
  } catch (const Error& e) {
    report.problems.push_back(e.what());
    return report;
  }
  const auto& sig = *a.signature();
  for (std::uint32_t i = 0; i < sig.size(); ++i) {
    NcPoly lhs = apply_tame(t, a.differential(i));
    NcPoly rhs = leibniz_extend(b, apply_tame(t, NcPoly::generator(a.signature(), i)));
    NcPoly residual = lhs - rhs;
    report.generators.push_back({sig[i].name, residual.to_string(), residual.is_zero()});
  }
  return report;
}

SemifreeDga stabilize_all(const SemifreeDga& dga, const std::vector<int>& ks) {
  SemifreeDga out = dga;
  for (int k : ks) out = stabilize(out, k);
  return out;
}

MapReport verify_stable_tame(const StableTameCertificate& c, const SemifreeDga& a, const SemifreeDga& b) {
  SemifreeDga sa = stabilize_all(a, c.stabilizations_source);
  SemifreeDga sb = stabilize_all(b, c.stabilizations_target);
  if (degree_multiset(*sa.signature()) != degree_multiset(*sb.signature())) {
    MapReport report;
    report.problems.push_back("NoRelabelPossible: stabilized generator degree multisets differ");
    return report;
  }
  return verify_dga_map(c.iso, sa, sb);
}

SemifreeDga transport_dga(const SemifreeDga& a, const TameIso& t) {
  require_same_signature(a.signature(), t.source, "transport_dga");
  TameIso inv = invert_tame(t);
  std::vector<NcPoly> differential;
  differential.reserve(t.target->size());
  for (std::uint32_t h = 0; h < t.target->size(); ++h) {
    NcPoly preimage = apply_tame(inv, NcPoly::generator(t.target, h));
    differential.push_back(apply_tame(t, leibniz_extend(a, preimage)));
  }
  return SemifreeDga(t.target, std::move(differential));
}

}  // namespace sfdga

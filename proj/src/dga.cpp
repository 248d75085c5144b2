#include "sfdga/dga.hpp"

#include <sstream>

#include "sfdga/error.hpp"

namespace sfdga {

SemifreeDga::SemifreeDga(SignaturePtr sig, std::vector<NcPoly> differential)
    : sig_(std::move(sig)), differential_(std::move(differential)) {
  if (differential_.size() != sig_->size())
    throw Error(ErrorKind::InvalidArgument, "differential table size does not match generator count");
  for (const auto& d : differential_) require_same_signature(d.signature(), sig_, "differential value");
}

const NcPoly& SemifreeDga::differential(std::string_view name) const {
  auto index = sig_->index_of(name);
  if (!index) throw Error(ErrorKind::UnknownGenerator, std::string(name));
  return differential_[*index];
}

NcPoly leibniz_extend(const SemifreeDga& dga, const NcPoly& p) {
  require_same_signature(p.signature(), dga.signature(), "leibniz_extend");
  const auto& sig = *dga.signature();
  NcPoly result(dga.signature());
  for (const auto& [w, c] : p.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const NcPoly& dg = dga.differential(w[i]);
      Coefficient scaled = (prefix_degree % 2 != 0) ? -c : c;
      for (const auto& [dw, dc] : dg.terms()) {
        Word out;
        out.reserve(w.size() - 1 + dw.size());
        out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        out.insert(out.end(), dw.begin(), dw.end());
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        result.add_term(out, scaled * dc);
      }
      prefix_degree += sig[w[i]].degree;
    }
  }
  return result;
}

bool ValidationReport::passed() const {
  for (const auto& g : generators)
    if (!g.degree_ok || !g.square_zero) return false;
  return true;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& g : generators) {
    out << (g.degree_ok && g.square_zero ? "ok   " : "FAIL ") << g.name << " (degree " << g.degree
        << "): d = " << g.differential;
    if (!g.degree_ok) out << "  [not homogeneous of degree " << g.degree - 1 << "]";
    if (!g.square_zero) out << "  [d^2 = " << g.square << "]";
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

ValidationReport validate(const SemifreeDga& dga) {
  ValidationReport report;
  const auto& sig = *dga.signature();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const NcPoly& d = dga.differential(i);
    NcPoly dd = leibniz_extend(dga, d);
    report.generators.push_back(GeneratorCheck{sig[i].name, sig[i].degree, is_homogeneous_of(d, sig[i].degree - 1),
                                               dd.is_zero(), d.to_string(), dd.to_string()});
  }
  return report;
}

SemifreeDga stabilize(const SemifreeDga& dga, int k) {
  const auto& sig = *dga.signature();
  int i = 1;
  while (sig.index_of("e#" + std::to_string(i)) || sig.index_of("f#" + std::to_string(i))) ++i;
  auto gens = sig.generators();
  gens.push_back({"e#" + std::to_string(i), k + 1});
  gens.push_back({"f#" + std::to_string(i), k});
  auto stabilized = make_signature(sig.ring(), std::move(gens));

  std::vector<NcPoly> differential;
  differential.reserve(stabilized->size());
  for (const auto& d : dga.differentials()) differential.push_back(rename_into(d, stabilized));
  auto f_index = static_cast<std::uint32_t>(stabilized->size() - 1);
  differential.push_back(NcPoly::generator(stabilized, f_index));
  differential.push_back(NcPoly::zero(stabilized));
  return SemifreeDga(stabilized, std::move(differential));
}

AlgebraPresentation h0_presentation(const SemifreeDga& dga) {
  const auto& sig = *dga.signature();
  std::vector<GeneratorSymbol> degree_zero;
  for (const auto& g : sig.generators()) {
    if (g.degree < 0) throw Error(ErrorKind::NegativeDegreeGenerator, g.name + " has negative degree " + std::to_string(g.degree));
    if (g.degree == 0) degree_zero.push_back(g);
  }
  AlgebraPresentation h0;
  h0.name = "H0";
  h0.signature = make_signature(sig.ring(), std::move(degree_zero));
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (sig[i].degree == 1) h0.relations.push_back(rename_into(dga.differential(i), h0.signature));
  return h0;
}

bool check_augmentation(const SemifreeDga& dga, const Augmentation& eps) {
  const auto& sig = *dga.signature();
  if (eps.values.size() != sig.size())
    throw Error(ErrorKind::MissingValue, "augmentation must assign a value to every generator");
  for (const auto& v : eps.values)
    if (!(v.ring() == sig.ring())) throw Error(ErrorKind::MixedRings, "augmentation value");
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (sig[i].degree != 0 && !eps.values[i].is_zero()) return false;
    if (!evaluate(dga.differential(i), eps.values).is_zero()) return false;
  }
  return true;
}

}  // namespace sfdga

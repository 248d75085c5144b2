#include "sfdga/reduce.hpp"

#include "sfdga/error.hpp"

namespace sfdga {

std::string inverse_name(const std::string& generator) { return generator + "_inv"; }

namespace {

std::vector<GeneratorSymbol> x_symbols(const GroupPresentation& p) {
  std::vector<GeneratorSymbol> xs;
  for (const auto& g : p.generators) xs.push_back({g, 0});
  for (const auto& g : p.generators) xs.push_back({inverse_name(g), 0});
  return xs;
}

// f_j over `sig`, whose first 2n generators are X in order.
std::vector<NcPoly> relation_polys_over(const GroupPresentation& p, const SignaturePtr& sig) {
  const auto n = static_cast<std::uint32_t>(p.generators.size());
  std::vector<NcPoly> fs;
  fs.reserve(p.relators.size() + 2 * n);
  NcPoly one = NcPoly::one(sig);
  for (const auto& relator : p.relators) {
    Word w;
    for (const auto& letter : relator) {
      if (letter.generator >= n) throw Error(ErrorKind::UnknownGenerator, "relator letter out of range");
      w.push_back(letter.inverse ? letter.generator + n : letter.generator);
    }
    fs.push_back(NcPoly::monomial(sig, std::move(w)) - one);
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    fs.push_back(NcPoly::monomial(sig, Word{i, i + n}) - one);
    fs.push_back(NcPoly::monomial(sig, Word{i + n, i}) - one);
  }
  return fs;
}

}  // namespace

RelationSystem group_relation_polys(const GroupPresentation& p, RingSpec ring) {
  auto sig = make_signature(ring, x_symbols(p));
  return {sig, relation_polys_over(p, sig)};
}

DgaPair algebra_to_dgas(const AlgebraPresentation& p) {
  const auto& source = *p.signature;
  if (source.size() == 0) throw Error(ErrorKind::EmptyPresentation, "algebra presentation needs a generator");
  if (p.relations.empty()) throw Error(ErrorKind::EmptyPresentation, "algebra presentation needs a relation");
  auto gens = source.generators();
  for (const auto& g : gens)
    if (g.degree != 0) throw Error(ErrorKind::InvalidArgument, "presentation generators must have degree 0");
  for (std::size_t j = 0; j < p.relations.size(); ++j) gens.push_back({"r" + std::to_string(j + 1), 1});
  auto sig = make_signature(source.ring(), std::move(gens));

  std::vector<NcPoly> da, db;
  for (std::size_t i = 0; i < source.size(); ++i) {
    da.push_back(NcPoly::zero(sig));
    db.push_back(NcPoly::zero(sig));
  }
  for (const auto& f : p.relations) {
    require_same_signature(f.signature(), p.signature, "algebra relation");
    da.push_back(rename_into(f, sig));
    db.push_back(NcPoly::one(sig));
  }
  return {SemifreeDga(sig, std::move(da)), SemifreeDga(sig, std::move(db))};
}

DgaPair group_to_dgas(const GroupPresentation& p, RingSpec ring) {
  auto gens = x_symbols(p);
  const std::size_t x_count = gens.size();
  const std::size_t y_count = p.relators.size() + x_count;
  for (std::size_t j = 0; j < y_count; ++j) gens.push_back({"y" + std::to_string(j + 1), 1});
  for (std::size_t i = 0; i < x_count; ++i) gens.push_back({"z_" + gens[i].name, 1});
  auto sig = make_signature(ring, std::move(gens));

  auto fs = relation_polys_over(p, sig);
  std::vector<NcPoly> da, db;
  for (std::size_t i = 0; i < x_count; ++i) {
    da.push_back(NcPoly::zero(sig));
    db.push_back(NcPoly::zero(sig));
  }
  for (const auto& f : fs) {
    da.push_back(f);
    db.push_back(f);
  }
  for (std::uint32_t i = 0; i < x_count; ++i) {
    da.push_back(NcPoly::zero(sig));
    db.push_back(NcPoly::generator(sig, i) - NcPoly::one(sig));
  }
  return {SemifreeDga(sig, std::move(da)), SemifreeDga(sig, std::move(db))};
}

GroupDgaShape group_dga_shape(const Signature& sig) {
  GroupDgaShape shape;
  while (shape.x_count < sig.size() && sig[shape.x_count].degree == 0) ++shape.x_count;
  const std::size_t rest = sig.size() - shape.x_count;
  if (shape.x_count % 2 != 0 || rest < 2 * shape.x_count)
    throw Error(ErrorKind::NotGroupReduction, "signature does not have the X, Y, Z block layout");
  shape.y_count = rest - shape.x_count;
  for (std::size_t k = shape.x_count; k < sig.size(); ++k)
    if (sig[k].degree != 1) throw Error(ErrorKind::NotGroupReduction, sig[k].name + " is not of degree 1");
  for (std::size_t i = 0; i < shape.x_count; ++i)
    if (sig[shape.z(i)].name != "z_" + sig[i].name)
      throw Error(ErrorKind::NotGroupReduction, "expected z_" + sig[i].name + ", found " + sig[shape.z(i)].name);
  return shape;
}

AugmentationPair canonical_augmentations(const SemifreeDga& a, const SemifreeDga& b) {
  if (!same_signature(a.signature(), b.signature()))
    throw Error(ErrorKind::NotGroupReduction, "the two algebras have different signatures");
  const auto& sig = *a.signature();
  auto shape = group_dga_shape(sig);
  Augmentation eps;
  for (std::size_t i = 0; i < sig.size(); ++i)
    eps.values.push_back(i < shape.x_count ? Coefficient::one(sig.ring()) : Coefficient::zero(sig.ring()));
  return {eps, eps};
}

}  // namespace sfdga

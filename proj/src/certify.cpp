#include "sfdga/certify.hpp"

#include <future>
#include <sstream>

#include "sfdga/error.hpp"

namespace sfdga {

std::optional<std::vector<CofactorRep>> find_triviality_reps(const GroupPresentation& p, RingSpec ring,
                                                             SearchBound bound, unsigned threads) {
  auto system = group_relation_polys(p, ring);
  const auto& sig = system.signature;
  const std::size_t targets = sig->size();
  auto search = [&](std::size_t i) {
    NcPoly target = NcPoly::generator(sig, static_cast<std::uint32_t>(i)) - NcPoly::one(sig);
    return member_with_cofactors(target, system.relations, bound);
  };

  std::vector<std::optional<CofactorRep>> found(targets);
  if (threads <= 1) {
    for (std::size_t i = 0; i < targets; ++i) {
      found[i] = search(i);
      if (!found[i]) return std::nullopt;
    }
  } else {
    for (std::size_t start = 0; start < targets; start += threads) {
      std::vector<std::future<std::optional<CofactorRep>>> batch;
      for (std::size_t i = start; i < std::min(targets, start + threads); ++i)
        batch.push_back(std::async(std::launch::async, search, i));
      for (std::size_t k = 0; k < batch.size(); ++k) found[start + k] = batch[k].get();
    }
  }
  std::vector<CofactorRep> reps;
  for (auto& rep : found) {
    if (!rep) return std::nullopt;
    reps.push_back(std::move(*rep));
  }
  return reps;
}

NcPoly build_w(const CofactorRep& rep, const SemifreeDga& dga) {
  auto shape = group_dga_shape(*dga.signature());
  std::vector<std::uint32_t> ys;
  for (std::size_t j = 0; j < shape.y_count; ++j) ys.push_back(shape.y(j));
  return substitute_relation_generators(rep, dga, ys);
}

TameIso build_phi(const DgaPair& dgas, const std::vector<CofactorRep>& reps) {
  const auto& sig = dgas.a.signature();
  auto shape = group_dga_shape(*sig);
  if (reps.size() != shape.x_count) throw Error(ErrorKind::InvalidArgument, "need one representation per x in X");
  TameIso phi = TameIso::identity(sig);
  for (std::size_t i = 0; i < shape.x_count; ++i) {
    NcPoly w = build_w(reps[i], dgas.a);
    if (!is_homogeneous_of(w, 1))
      throw Error(ErrorKind::InvalidShift, "w for " + (*sig)[i].name + " is not homogeneous of degree 1");
    phi.steps.push_back(ElementaryAuto{shape.z(i), Coefficient::one(sig->ring()), std::move(w)});
  }
  return phi;
}

std::optional<TrivialityCertificate> certify_trivial_group(const GroupPresentation& p, RingSpec ring,
                                                          SearchBound bound, unsigned threads) {
  auto reps = find_triviality_reps(p, ring, bound, threads);
  if (!reps) return std::nullopt;
  DgaPair dgas = group_to_dgas(p, ring);
  TrivialityCertificate cert{p, ring, std::string(kLeibnizConvention), bound, std::move(*reps), {}};
  cert.phi = build_phi(dgas, cert.reps);
  auto report = verify_certificate(cert, dgas.a, dgas.b);
  if (!report.passed())
    throw Error(ErrorKind::InternalVerificationFailure, "synthesized certificate fails verification:\n" +
                                                            report.to_string());
  return cert;
}

bool CertificateReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

void CertificateReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string CertificateReport::to_string(bool color) const {
  auto tag = [color](bool ok) -> std::string {
    if (!color) return ok ? "ok  " : "FAIL";
    return ok ? "\x1b[32mok  \x1b[0m" : "\x1b[31mFAIL\x1b[0m";
  };
  std::ostringstream out;
  for (const auto& c : checks) {
    out << tag(c.ok) << ' ' << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

std::string failing_generators(const MapReport& r) {
  std::string out;
  for (const auto& p : r.problems) out += (out.empty() ? "" : "; ") + p;
  for (const auto& g : r.generators)
    if (!g.ok) out += (out.empty() ? "" : "; ") + g.name + " (residual " + g.residual + ")";
  return out;
}

bool ring_matches(const RingSpec& ring, const SemifreeDga& a, const SemifreeDga& b, CertificateReport& report) {
  bool ok = a.signature()->ring() == ring && b.signature()->ring() == ring;
  report.add("ring", ok,
             ok ? ring.to_string()
                : "RingMismatch: certificate " + ring.to_string() + ", A " + a.signature()->ring().to_string() +
                      ", B " + b.signature()->ring().to_string());
  return ok;
}

}  // namespace

CertificateReport verify_certificate(const TrivialityCertificate& cert, const SemifreeDga& a, const SemifreeDga& b) {
  CertificateReport report;
  report.add("convention", cert.convention == kLeibnizConvention, cert.convention);
  if (!ring_matches(cert.ring, a, b, report)) return report;

  DgaPair expected = group_to_dgas(cert.presentation, cert.ring);
  bool dgas_ok = expected.a == a && expected.b == b;
  report.add("dga files match the presentation", dgas_ok,
             dgas_ok ? "" : "the supplied algebras are not the construction for " + cert.presentation.to_string());
  if (!dgas_ok) return report;

  auto system = group_relation_polys(cert.presentation, cert.ring);
  const auto& xsig = system.signature;
  if (cert.reps.size() != xsig->size()) {
    report.add("cofactors", false, "expected " + std::to_string(xsig->size()) + " representations");
    return report;
  }
  for (std::uint32_t i = 0; i < xsig->size(); ++i) {
    const auto& rep = cert.reps[i];
    NcPoly target = NcPoly::generator(xsig, i) - NcPoly::one(xsig);
    bool ok = false;
    std::string detail;
    try {
      bool same_sig = true;
      for (const auto& t : rep.triples)
        same_sig = same_sig && same_signature(t.left.signature(), xsig) && same_signature(t.right.signature(), xsig);
      ok = same_sig && verify_cofactors(rep, target, system.relations);
      if (!ok) detail = "sum does not expand to " + target.to_string();
    } catch (const Error& e) {
      detail = e.what();
    }
    report.add("cofactors for " + (*xsig)[i].name + " - 1", ok, detail);
  }

  // phi must fix X and Y, so it is the identity relabeling followed by one
  // shift per z_x whose w_x is exactly what the cofactors induce.
  const auto& sig = a.signature();
  auto shape = group_dga_shape(*sig);
  const TameIso& phi = cert.phi;
  bool shape_ok = phi.source && phi.target && same_signature(phi.source, b.signature()) &&
                  same_signature(phi.target, a.signature());
  std::string shape_detail;
  if (shape_ok) {
    for (std::uint32_t i = 0; i < phi.relabel.size() && shape_ok; ++i)
      if (phi.relabel[i] != i) {
        shape_ok = false;
        shape_detail = "relabel moves " + (*sig)[i].name;
      }
    if (shape_ok && phi.relabel.size() != sig->size()) {
      shape_ok = false;
      shape_detail = "relabel is not total";
    }
    if (shape_ok && phi.steps.size() != shape.x_count) {
      shape_ok = false;
      shape_detail = "expected one step per z generator";
    }
    for (std::size_t i = 0; shape_ok && i < phi.steps.size(); ++i) {
      const auto& step = phi.steps[i];
      if (step.target != shape.z(i) || !step.scalar.is_one()) {
        shape_ok = false;
        shape_detail = "step " + std::to_string(i + 1) + " is not z_x -> z_x + w_x";
      } else if (i < cert.reps.size()) {
        try {
          if (!(step.shift == build_w(cert.reps[i], a))) {
            shape_ok = false;
            shape_detail = "shift of " + (*sig)[step.target].name + " differs from the w induced by its cofactors";
          }
        } catch (const Error& e) {
          shape_ok = false;
          shape_detail = e.what();
        }
      }
    }
  } else {
    shape_detail = "phi must map the signature of B to the signature of A";
  }
  report.add("phi fixes X and Y and shifts each z_x by w_x", shape_ok, shape_detail);

  MapReport chain = verify_dga_map(phi, b, a);
  report.add("phi commutes with the differentials", chain.passed(), failing_generators(chain));

  auto eps = canonical_augmentations(a, b);
  bool aug_a = check_augmentation(a, eps.a);
  bool aug_b = check_augmentation(b, eps.b);
  report.add("augmentations", aug_a && aug_b);
  bool compatible = chain.problems.empty();
  std::string incompatible;
  if (compatible) {
    for (std::uint32_t g = 0; g < sig->size(); ++g) {
      Coefficient lhs = evaluate(apply_tame(phi, NcPoly::generator(b.signature(), g)), eps.a.values);
      if (!(lhs == eps.b.values[g])) {
        compatible = false;
        incompatible += (incompatible.empty() ? "" : ", ") + (*sig)[g].name;
      }
    }
  }
  report.add("phi respects the augmentations", compatible, incompatible);
  return report;
}

std::optional<AlgebraTrivialityWitness> certify_trivial_algebra(const AlgebraPresentation& p, SearchBound bound) {
  DgaPair dgas = algebra_to_dgas(p);
  auto rep = member_with_cofactors(NcPoly::one(p.signature), p.relations, bound);
  if (!rep) return std::nullopt;
  auto rs = degree_one_generators(*dgas.a.signature());
  AlgebraTrivialityWitness w{p, std::string(kLeibnizConvention), bound, std::move(*rep),
                             NcPoly::zero(dgas.a.signature()), NcPoly::generator(dgas.b.signature(), rs.front())};
  w.u_a = substitute_relation_generators(w.rep, dgas.a, rs);
  auto report = verify_algebra_witness(w, dgas.a, dgas.b);
  if (!report.passed())
    throw Error(ErrorKind::InternalVerificationFailure, "algebra witness fails verification:\n" + report.to_string());
  return w;
}

CertificateReport verify_algebra_witness(const AlgebraTrivialityWitness& w, const SemifreeDga& a,
                                         const SemifreeDga& b) {
  CertificateReport report;
  report.add("convention", w.convention == kLeibnizConvention, w.convention);
  if (!ring_matches(w.presentation.ring(), a, b, report)) return report;
  DgaPair expected = algebra_to_dgas(w.presentation);
  bool dgas_ok = expected.a == a && expected.b == b;
  report.add("dga files match the presentation", dgas_ok);
  if (!dgas_ok) return report;

  bool rep_ok = false;
  try {
    rep_ok = verify_cofactors(w.rep, NcPoly::one(w.presentation.signature), w.presentation.relations);
  } catch (const Error& e) {
    report.add("cofactors for 1", false, e.what());
  }
  if (report.checks.back().name != "cofactors for 1") report.add("cofactors for 1", rep_ok);

  NcPoly one = NcPoly::one(a.signature());
  bool ua = same_signature(w.u_a.signature(), a.signature()) && is_homogeneous_of(w.u_a, 1) &&
            leibniz_extend(a, w.u_a) == one;
  report.add("d_A(u_A) = 1", ua, w.u_a.to_string());
  bool ub = same_signature(w.u_b.signature(), b.signature()) && is_homogeneous_of(w.u_b, 1) &&
            leibniz_extend(b, w.u_b) == one;
  report.add("d_B(u_B) = 1", ub, w.u_b.to_string());
  return report;
}

}  // namespace sfdga

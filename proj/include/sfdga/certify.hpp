#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfdga/ideal.hpp"
#include "sfdga/presentation.hpp"
#include "sfdga/reduce.hpp"
#include "sfdga/tame.hpp"

namespace sfdga {

// Evidence that a group presentation is trivial: for every x in X a
// cofactor representation of x - 1 in (f_1..f_N), and the tame isomorphism
// phi: B -> A, z_x -> z_x + w_x, that those representations induce.
struct TrivialityCertificate {
  GroupPresentation presentation;
  RingSpec ring = RingSpec::integers_mod(2);
  std::string convention{kLeibnizConvention};
  SearchBound bound_used;
  std::vector<CofactorRep> reps;  // X order; cofactors live over group_relation_polys
  TameIso phi;
};

// One membership search per x in X. With threads > 1 the searches run
// concurrently; results are merged in X order, so output does not depend on
// the thread count.
std::optional<std::vector<CofactorRep>> find_triviality_reps(const GroupPresentation& p, RingSpec ring,
                                                             SearchBound bound, unsigned threads = 1);

// w_x = sum p * y_j * q, living in the signature of `dgas`.
NcPoly build_w(const CofactorRep& rep, const SemifreeDga& dga);

// One elementary step z_x -> z_x + w_x per x, identity relabeling.
TameIso build_phi(const DgaPair& dgas, const std::vector<CofactorRep>& reps);

// Search, synthesis and full verification. Throws
// InternalVerificationFailure rather than return an unverified certificate.
std::optional<TrivialityCertificate> certify_trivial_group(const GroupPresentation& p, RingSpec ring,
                                                          SearchBound bound, unsigned threads = 1);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CertificateReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_string(bool color = false) const;
  void add(std::string name, bool ok, std::string detail = {});
};

// Independent re-verification against supplied DGA files.
CertificateReport verify_certificate(const TrivialityCertificate& cert, const SemifreeDga& a, const SemifreeDga& b);

// 1 in (f_1..f_m): the cofactors, u_A = sum p * r_j * q with d_A(u_A) = 1 and
// u_B = r_1 with d_B(u_B) = 1. Stable tame equivalence of the acyclic pair
// follows from the generator/relation count match and is not constructed.
struct AlgebraTrivialityWitness {
  AlgebraPresentation presentation;
  std::string convention{kLeibnizConvention};
  SearchBound bound_used;
  CofactorRep rep;
  NcPoly u_a;
  NcPoly u_b;
};

std::optional<AlgebraTrivialityWitness> certify_trivial_algebra(const AlgebraPresentation& p, SearchBound bound);

CertificateReport verify_algebra_witness(const AlgebraTrivialityWitness& w, const SemifreeDga& a,
                                         const SemifreeDga& b);

}  // namespace sfdga

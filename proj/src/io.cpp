#include "sfdga/io.hpp"

#include <fstream>
#include <sstream>

#include "sfdga/error.hpp"
#include "sfdga/parse.hpp"

namespace sfdga::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedCertificate, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

void expect_format(const Json& j, const char* format) {
  if (string_field(j, "format") != format) malformed(std::string("expected format ") + format);
  const Json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != 1) malformed("unsupported version");
}

NcPoly poly_field(const Json& j, const char* key, const SignaturePtr& sig) {
  return parse_poly(string_field(j, key), sig);
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) malformed("expected an integer array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) malformed("expected an integer array");
    out.push_back(v.get<int>());
  }
  return out;
}

// Wraps reader failures (JSON type errors, polynomial parse errors) as
// MalformedCertificate so callers see one error kind.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedCertificate) throw;
    malformed(e.what());
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

}  // namespace

Json signature_to_json(const Signature& sig) {
  Json gens = Json::array();
  for (const auto& g : sig.generators()) gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
  return Json{{"ring", sig.ring().to_string()}, {"generators", gens}};
}

SignaturePtr signature_from_json(const Json& j) {
  return guarded([&] {
    RingSpec ring = RingSpec::parse(string_field(j, "ring"));
    std::vector<GeneratorSymbol> gens;
    for (const auto& g : field(j, "generators")) gens.push_back({string_field(g, "name"), field(g, "degree").get<int>()});
    return make_signature(ring, std::move(gens));
  });
}

Json dga_to_json(const SemifreeDga& dga) {
  const auto& sig = *dga.signature();
  Json j{{"format", kDgaFormat}, {"version", 1}, {"ring", sig.ring().to_string()}, {"convention", kLeibnizConvention}};
  j["generators"] = signature_to_json(sig)["generators"];
  Json diff = Json::array();
  for (const auto& d : dga.differentials()) diff.push_back(d.to_string());
  j["differential"] = diff;
  return j;
}

SemifreeDga dga_from_json(const Json& j) {
  return guarded([&] {
    expect_format(j, kDgaFormat);
    if (j.contains("convention") && string_field(j, "convention") != kLeibnizConvention)
      malformed("unsupported sign convention");
    auto sig = signature_from_json(j);
    const Json& diff = field(j, "differential");
    if (!diff.is_array() || diff.size() != sig->size()) malformed("differential must list one polynomial per generator");
    std::vector<NcPoly> d;
    for (const auto& text : diff) d.push_back(parse_poly(text.get<std::string>(), sig));
    return SemifreeDga(sig, std::move(d));
  });
}

Json tame_to_json(const StableTameCertificate& c) {
  const auto& iso = c.iso;
  Json steps = Json::array();
  for (const auto& e : iso.steps)
    steps.push_back(Json{{"generator", (*iso.source)[e.target].name},
                         {"scalar", e.scalar.to_string()},
                         {"shift", e.shift.to_string()}});
  Json relabel = Json::array();
  for (std::size_t i = 0; i < iso.relabel.size(); ++i)
    relabel.push_back(Json::array({(*iso.source)[i].name, (*iso.target)[iso.relabel[i]].name}));
  return Json{{"format", kTameFormat},
              {"version", 1},
              {"ring", iso.source->ring().to_string()},
              {"convention", kLeibnizConvention},
              {"source", signature_to_json(*iso.source)},
              {"target", signature_to_json(*iso.target)},
              {"stabilizations_source", c.stabilizations_source},
              {"stabilizations_target", c.stabilizations_target},
              {"steps", steps},
              {"relabel", relabel}};
}

StableTameCertificate tame_from_json(const Json& j) {
  return guarded([&] {
    expect_format(j, kTameFormat);
    StableTameCertificate c;
    c.stabilizations_source = int_list(field(j, "stabilizations_source"));
    c.stabilizations_target = int_list(field(j, "stabilizations_target"));
    auto& iso = c.iso;
    iso.source = signature_from_json(field(j, "source"));
    iso.target = signature_from_json(field(j, "target"));
    if (RingSpec::parse(string_field(j, "ring")) != iso.source->ring()) malformed("ring stamp disagrees with source");
    for (const auto& s : field(j, "steps")) {
      auto index = iso.source->index_of(string_field(s, "generator"));
      if (!index) malformed("step names unknown generator " + string_field(s, "generator"));
      iso.steps.push_back(ElementaryAuto{*index, Coefficient::parse(iso.source->ring(), string_field(s, "scalar")),
                                         poly_field(s, "shift", iso.source)});
    }
    const Json& relabel = field(j, "relabel");
    if (!relabel.is_array() || relabel.size() != iso.source->size()) malformed("relabel must cover every generator");
    iso.relabel.assign(iso.source->size(), 0);
    std::vector<bool> assigned(iso.source->size(), false);
    for (const auto& pair : relabel) {
      if (!pair.is_array() || pair.size() != 2) malformed("relabel entries are [source, target] pairs");
      auto from = iso.source->index_of(pair[0].get<std::string>());
      auto to = iso.target->index_of(pair[1].get<std::string>());
      if (!from || !to || assigned[*from]) malformed("bad relabel entry");
      assigned[*from] = true;
      iso.relabel[*from] = *to;
    }
    return c;
  });
}

Json cofactors_to_json(const CofactorRep& rep) {
  Json triples = Json::array();
  for (const auto& t : rep.triples)
    triples.push_back(Json{{"left", t.left.to_string()}, {"relation", t.relation + 1}, {"right", t.right.to_string()}});
  return triples;
}

CofactorRep cofactors_from_json(const Json& j, const SignaturePtr& sig) {
  return guarded([&] {
    if (!j.is_array()) malformed("cofactors must be an array of triples");
    CofactorRep rep;
    for (const auto& t : j) {
      const Json& rel = field(t, "relation");
      if (!rel.is_number_integer() || rel.get<long>() < 1) malformed("relation indices are 1-based integers");
      rep.triples.push_back({poly_field(t, "left", sig), static_cast<std::size_t>(rel.get<long>() - 1),
                             poly_field(t, "right", sig)});
    }
    return rep;
  });
}

Json certificate_to_json(const TrivialityCertificate& cert) {
  auto system = group_relation_polys(cert.presentation, cert.ring);
  Json relations = Json::array();
  for (const auto& f : system.relations) relations.push_back(f.to_string());
  Json cofactors = Json::array();
  for (std::uint32_t i = 0; i < cert.reps.size(); ++i) {
    NcPoly target = NcPoly::generator(system.signature, i) - NcPoly::one(system.signature);
    cofactors.push_back(Json{{"generator", (*system.signature)[i].name},
                             {"target", target.to_string()},
                             {"triples", cofactors_to_json(cert.reps[i])}});
  }
  return Json{{"format", kGroupCertificateFormat},
              {"version", 1},
              {"ring", cert.ring.to_string()},
              {"convention", cert.convention},
              {"presentation", cert.presentation.to_string()},
              {"bound", cert.bound_used.max_word_length},
              {"relations", relations},
              {"cofactors", cofactors},
              {"phi", tame_to_json(StableTameCertificate{{}, {}, cert.phi})}};
}

TrivialityCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    expect_format(j, kGroupCertificateFormat);
    TrivialityCertificate cert;
    cert.ring = RingSpec::parse(string_field(j, "ring"));
    cert.convention = string_field(j, "convention");
    auto parsed = parse_presentation(string_field(j, "presentation"), cert.ring);
    if (!std::holds_alternative<GroupPresentation>(parsed)) malformed("presentation is not a group presentation");
    cert.presentation = std::get<GroupPresentation>(parsed);
    const Json& bound = field(j, "bound");
    if (!bound.is_number_unsigned()) malformed("bound must be a nonnegative integer");
    cert.bound_used = SearchBound{bound.get<unsigned>()};

    auto system = group_relation_polys(cert.presentation, cert.ring);
    const Json& relations = field(j, "relations");
    if (!relations.is_array() || relations.size() != system.relations.size()) malformed("relation list length");
    for (std::size_t k = 0; k < relations.size(); ++k)
      if (!(parse_poly(relations[k].get<std::string>(), system.signature) == system.relations[k]))
        malformed("relation " + std::to_string(k + 1) + " does not match the presentation");

    const Json& cofactors = field(j, "cofactors");
    if (!cofactors.is_array() || cofactors.size() != system.signature->size())
      malformed("expected one cofactor entry per generator of X");
    for (std::size_t i = 0; i < cofactors.size(); ++i) {
      if (string_field(cofactors[i], "generator") != (*system.signature)[i].name)
        malformed("cofactor entries must follow X order");
      cert.reps.push_back(cofactors_from_json(field(cofactors[i], "triples"), system.signature));
    }
    auto tame = tame_from_json(field(j, "phi"));
    if (!tame.stabilizations_source.empty() || !tame.stabilizations_target.empty())
      malformed("phi is an unstabilized tame isomorphism");
    cert.phi = std::move(tame.iso);
    return cert;
  });
}

Json witness_to_json(const AlgebraTrivialityWitness& w) {
  return Json{{"format", kAlgebraCertificateFormat},
              {"version", 1},
              {"ring", w.presentation.ring().to_string()},
              {"convention", w.convention},
              {"presentation", w.presentation.to_string()},
              {"bound", w.bound_used.max_word_length},
              {"cofactors", cofactors_to_json(w.rep)},
              {"u_A", w.u_a.to_string()},
              {"u_B", w.u_b.to_string()},
              {"equivalence", "A and B are acyclic with equal generator counts in each degree; stable tame "
                              "isomorphism follows from the classification of acyclic semifree DGAs and is "
                              "not constructed here"}};
}

AlgebraTrivialityWitness witness_from_json(const Json& j) {
  return guarded([&] {
    expect_format(j, kAlgebraCertificateFormat);
    RingSpec ring = RingSpec::parse(string_field(j, "ring"));
    auto parsed = parse_presentation(string_field(j, "presentation"), ring);
    if (!std::holds_alternative<AlgebraPresentation>(parsed)) malformed("presentation is not an algebra presentation");
    auto presentation = std::get<AlgebraPresentation>(std::move(parsed));
    DgaPair dgas = algebra_to_dgas(presentation);
    const Json& bound = field(j, "bound");
    if (!bound.is_number_unsigned()) malformed("bound must be a nonnegative integer");
    AlgebraTrivialityWitness w{presentation,
                               string_field(j, "convention"),
                               SearchBound{bound.get<unsigned>()},
                               cofactors_from_json(field(j, "cofactors"), presentation.signature),
                               poly_field(j, "u_A", dgas.a.signature()),
                               poly_field(j, "u_B", dgas.b.signature())};
    return w;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace sfdga::io

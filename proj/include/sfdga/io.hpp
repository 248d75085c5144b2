#pragma once

#include <string>

#include <json.hpp>

#include "sfdga/certify.hpp"
#include "sfdga/dga.hpp"
#include "sfdga/ideal.hpp"
#include "sfdga/tame.hpp"

namespace sfdga::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kDgaFormat = "sfdga.dga";
inline constexpr const char* kTameFormat = "sfdga.stable-tame";
inline constexpr const char* kGroupCertificateFormat = "sfdga.group-triviality";
inline constexpr const char* kAlgebraCertificateFormat = "sfdga.algebra-triviality";

// All readers throw Error(MalformedCertificate) on structural problems.

Json signature_to_json(const Signature& sig);
SignaturePtr signature_from_json(const Json& j);

Json dga_to_json(const SemifreeDga& dga);
SemifreeDga dga_from_json(const Json& j);

Json tame_to_json(const StableTameCertificate& c);
StableTameCertificate tame_from_json(const Json& j);

// Relation indices are written 1-based, matching the y_j / r_j names.
Json cofactors_to_json(const CofactorRep& rep);
CofactorRep cofactors_from_json(const Json& j, const SignaturePtr& sig);

Json certificate_to_json(const TrivialityCertificate& cert);
TrivialityCertificate certificate_from_json(const Json& j);

Json witness_to_json(const AlgebraTrivialityWitness& w);
AlgebraTrivialityWitness witness_from_json(const Json& j);

// Two-space indent plus trailing newline; byte-stable for equal inputs.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace sfdga::io

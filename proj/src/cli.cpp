#include "sfdga/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "sfdga/certify.hpp"
#include "sfdga/error.hpp"
#include "sfdga/io.hpp"
#include "sfdga/parse.hpp"
#include "sfdga/reduce.hpp"

namespace sfdga::cli {

namespace {

struct RunConfig {
  std::string ring = "zmod:2";
  unsigned max_bound = 6;
  double time_budget = 60.0;
  unsigned threads = 1;
  std::string construction;
  std::string out;
  int k = 0;
};

bool color_enabled() {
  const char* v = std::getenv("DGA_COLOR");
  return v != nullptr && std::string(v) == "1";
}

std::string pass_fail(bool ok) {
  if (!color_enabled()) return ok ? "PASS" : "FAIL";
  return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string stem_of(const std::string& path) {
  std::filesystem::path p(path);
  return (p.parent_path() / p.stem()).string();
}

Presentation load_presentation(const std::string& path, RingSpec ring) {
  return parse_presentation(io::read_text_file(path), ring);
}

int cmd_build(const std::string& input, const RunConfig& cfg, std::ostream& out) {
  RingSpec ring = RingSpec::parse(cfg.ring);
  auto pres = load_presentation(input, ring);
  DgaPair dgas = [&] {
    if (cfg.construction == "sec3") {
      if (!std::holds_alternative<AlgebraPresentation>(pres))
        throw Error(ErrorKind::KindMismatch, "construction sec3 needs an algebra presentation");
      return algebra_to_dgas(std::get<AlgebraPresentation>(pres));
    }
    if (!std::holds_alternative<GroupPresentation>(pres))
      throw Error(ErrorKind::KindMismatch, "construction sec4 needs a group presentation");
    return group_to_dgas(std::get<GroupPresentation>(pres), ring);
  }();
  std::string prefix = cfg.out.empty() ? stem_of(input) : cfg.out;
  bool ok = true;
  for (const auto& [label, dga] : {std::pair{"A", &dgas.a}, std::pair{"B", &dgas.b}}) {
    auto report = validate(*dga);
    std::string path = prefix + "." + label + ".json";
    io::write_text_file(path, io::dump(io::dga_to_json(*dga)));
    out << "wrote " << path << " (" << dga->signature()->size() << " generators)\n" << report.to_string();
    ok = ok && report.passed();
  }
  if (!ok) throw Error(ErrorKind::InternalVerificationFailure, "constructed DGA failed validation");
  return kExitOk;
}

int cmd_certify(const std::string& input, const RunConfig& cfg, std::ostream& out) {
  RingSpec ring = RingSpec::parse(cfg.ring);
  auto pres = load_presentation(input, ring);
  const bool is_group = std::holds_alternative<GroupPresentation>(pres);
  std::string path = cfg.out.empty() ? stem_of(input) + ".cert.json" : cfg.out;
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  std::optional<unsigned> last_completed;
  bool budget_hit = false;
  for (unsigned d = 0; d <= cfg.max_bound; ++d) {
    if (d > 0 && elapsed() > cfg.time_budget) {
      budget_hit = true;
      break;
    }
    SearchBound bound{d};
    if (is_group) {
      const auto& group = std::get<GroupPresentation>(pres);
      if (auto cert = certify_trivial_group(group, ring, bound, cfg.threads)) {
        io::write_text_file(path, io::dump(io::certificate_to_json(*cert)));
        out << "certificate found at bound " << d << " over " << ring.to_string() << "\n"
            << "wrote " << path << "\n";
        return kExitOk;
      }
    } else {
      const auto& algebra = std::get<AlgebraPresentation>(pres);
      if (auto witness = certify_trivial_algebra(algebra, bound)) {
        io::write_text_file(path, io::dump(io::witness_to_json(*witness)));
        out << "1 lies in the relation ideal at bound " << d << " over " << ring.to_string() << "\n"
            << "u_A = " << witness->u_a.to_string() << "\n"
            << "u_B = " << witness->u_b.to_string() << "\n"
            << "both algebras are acyclic; their stable tame equivalence is not constructed\n"
            << "wrote " << path << "\n";
        return kExitOk;
      }
    }
    last_completed = d;
  }
  out << "NOT FOUND: ";
  if (last_completed)
    out << "no certificate with cofactor words of length <= " << *last_completed;
  else
    out << "no bound was searched";
  out << " over " << ring.to_string() << " (" << (budget_hit ? "time budget exhausted" : "bound cap reached") << ")\n"
      << "result: inconclusive. The search is a semi-decision procedure; exhausting it says nothing "
         "about whether the presentation is trivial.\n";
  return kExitInconclusive;
}

int cmd_verify(const std::string& cert_path, const std::string& a_path, const std::string& b_path,
               std::ostream& out) {
  io::Json cert = io::read_json_file(cert_path);
  SemifreeDga a = io::dga_from_json(io::read_json_file(a_path));
  SemifreeDga b = io::dga_from_json(io::read_json_file(b_path));
  if (!cert.is_object() || !cert.contains("format")) throw Error(ErrorKind::MalformedCertificate, "missing format");
  std::string format = cert["format"].is_string() ? cert["format"].get<std::string>() : "";
  CertificateReport report;
  if (format == io::kGroupCertificateFormat) {
    report = verify_certificate(io::certificate_from_json(cert), a, b);
  } else if (format == io::kAlgebraCertificateFormat) {
    report = verify_algebra_witness(io::witness_from_json(cert), a, b);
  } else if (format == io::kTameFormat) {
    MapReport map = verify_stable_tame(io::tame_from_json(cert), a, b);
    out << map.to_string();
    return map.passed() ? kExitOk : kExitVerificationFailed;
  } else {
    throw Error(ErrorKind::MalformedCertificate, "unknown certificate format '" + format + "'");
  }
  out << report.to_string(color_enabled());
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_h0(const std::string& path, std::ostream& out) {
  SemifreeDga dga = io::dga_from_json(io::read_json_file(path));
  out << h0_presentation(dga).to_string() << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  SemifreeDga dga = io::dga_from_json(io::read_json_file(path));
  auto report = validate(dga);
  std::string text = report.to_string();
  // Colour only the verdict line.
  text.resize(text.size() - 5);
  out << text << pass_fail(report.passed()) << "\n";
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_stabilize(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  SemifreeDga dga = io::dga_from_json(io::read_json_file(path));
  SemifreeDga stabilized = stabilize(dga, cfg.k);
  std::string target = cfg.out.empty() ? path : cfg.out;
  io::write_text_file(target, io::dump(io::dga_to_json(stabilized)));
  const auto& sig = *stabilized.signature();
  out << "added " << sig[sig.size() - 2].name << " (degree " << cfg.k + 1 << ") and " << sig[sig.size() - 1].name
      << " (degree " << cfg.k << ")\nwrote " << target << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semifree DGA workbench: reductions, triviality certificates and tame isomorphism checks", "sfdga"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string input, cert_path, a_path, b_path;

  auto* build = app.add_subcommand("build", "compile a presentation into the DGA pair A, B");
  build->add_option("input", input, "presentation file")->required();
  build->add_option("--construction", cfg.construction, "sec3 (algebra) or sec4 (group)")
      ->required()
      ->check(CLI::IsMember({"sec3", "sec4"}));
  build->add_option("--ring", cfg.ring, "int, rat or zmod:<n>");
  build->add_option("--out", cfg.out, "output prefix; writes <prefix>.A.json and <prefix>.B.json");

  auto* certify = app.add_subcommand("certify", "search for a triviality certificate by iterative deepening");
  certify->add_option("input", input, "presentation file")->required();
  certify->add_option("--ring", cfg.ring, "int, rat or zmod:<n>");
  certify->add_option("--max-bound", cfg.max_bound, "largest cofactor word length to try");
  certify->add_option("--time-budget", cfg.time_budget, "seconds; checked before each new bound")
      ->check(CLI::PositiveNumber);
  certify->add_option("--threads", cfg.threads, "concurrent membership searches")->check(CLI::PositiveNumber);
  certify->add_option("--out", cfg.out, "certificate path");

  auto* verify = app.add_subcommand("verify", "re-verify a certificate against DGA files");
  verify->add_option("certificate", cert_path)->required();
  verify->add_option("A", a_path)->required();
  verify->add_option("B", b_path)->required();

  auto* h0 = app.add_subcommand("h0", "print the H0 presentation of a DGA");
  h0->add_option("dga", input)->required();

  auto* val = app.add_subcommand("validate", "check degrees and d^2 = 0");
  val->add_option("dga", input)->required();

  auto* stab = app.add_subcommand("stabilize", "adjoin e (degree k+1), f (degree k) with d(e) = f");
  stab->add_option("dga", input)->required();
  stab->add_option("-k,--k", cfg.k, "degree of f")->required();
  stab->add_option("--out", cfg.out, "output path (default: rewrite in place)");

  std::vector<std::string> argv_storage{"sfdga"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*build) return cmd_build(input, cfg, out);
    if (*certify) return cmd_certify(input, cfg, out);
    if (*verify) return cmd_verify(cert_path, a_path, b_path, out);
    if (*h0) return cmd_h0(input, out);
    if (*val) return cmd_validate(input, out);
    if (*stab) return cmd_stabilize(input, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::RingMismatch) return kExitVerificationFailed;
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sfdga::cli

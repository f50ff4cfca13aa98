// Command-line front end: tameness certificates, covering radii, finite
// presentations, and finite-model verification.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tamepres/examples.hpp"
#include "tamepres/presenter.hpp"
#include "tamepres/radius.hpp"
#include "tamepres/spec_io.hpp"
#include "tamepres/tameness.hpp"
#include "tamepres/verifier.hpp"

namespace {

using namespace tamepres;

std::vector<RadiusCert> layer_radii(const GroupSpec& spec,
                                    const TamenessReport& report) {
  std::vector<RadiusCert> radii;
  for (const auto& lr : report.layers) {
    std::vector<LatticeSet> family;
    for (const auto& cert : lr.certificates) family.push_back(cert.cone_set);
    radii.push_back(compute_p0(family, spec.rank(lr.layer)));
  }
  return radii;
}

int cmd_tame(const std::string& spec_path) {
  ParsedSpec ps = load_spec_file(spec_path);
  TamenessReport report = check_tame(ps.group, ps.module, ps.options.cert_cap);
  std::cout << render_tameness_report(ps.group, ps.module, report);
  return report.tame ? 0 : 1;
}

int cmd_radius(const std::string& spec_path) {
  ParsedSpec ps = load_spec_file(spec_path);
  TamenessReport report = check_tame(ps.group, ps.module, ps.options.cert_cap);
  if (!report.tame) {
    std::cout << render_tameness_report(ps.group, ps.module, report);
    return 1;
  }
  const auto radii = layer_radii(ps.group, report);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    std::cout << "layer " << (i + 1)
              << ": rank=" << ps.group.rank(static_cast<int>(i + 1)) << "\n"
              << render_radius_cert(radii[i]);
  }
  return 0;
}

int cmd_present(const std::string& spec_path, const std::string& out_path) {
  ParsedSpec ps = load_spec_file(spec_path);
  TamenessReport report = check_tame(ps.group, ps.module, ps.options.cert_cap);
  if (!report.tame) {
    std::cout << render_tameness_report(ps.group, ps.module, report);
    return 1;
  }
  const auto radii = layer_radii(ps.group, report);
  Presentation p = assemble(ps.group, ps.module, report, radii);
  const std::string text = render_presentation(p);

  std::ostream& info = out_path.empty() ? std::cerr : std::cout;
  info << "generators: " << p.generator_names.size() << "\n";
  for (std::size_t i = 0; i < p.p0.size(); ++i)
    info << "p0 layer " << (i + 1) << ": " << p.p0[i]
         << " (|V|=" << p.v_sizes[i] << ")\n";
  info << "|W|: " << p.w_size << "\n";
  info << "relators: RA=" << p.post_ra << " K0=" << p.post_k0
       << " C=" << p.post_c << " RQ=" << p.post_rq << " total="
       << p.relators.size() << "\n";
  info << "pre-reduction: RA=" << p.pre_ra << " K0=" << p.pre_k0
       << " C=" << p.pre_c << " RQ=" << p.pre_rq << "\n";

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write: " + out_path);
    out << text;
    info << "written: " << out_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& spec_path, const std::string& pres_path,
               long long mod, long long quot) {
  ParsedSpec ps = load_spec_file(spec_path);
  std::ifstream in(pres_path);
  if (!in) throw Error("cannot open presentation file: " + pres_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Presentation p =
      parse_presentation(buf.str(), ps.group, ps.module, pres_path);
  if (mod == 0) mod = ps.options.model_mod;
  if (quot == 0) quot = ps.options.model_quot;
  FiniteModel fm = build_finite_model(ps.group, ps.module, mod, quot);
  VerifyReport report = verify_presentation(p, fm);
  std::cout << render_verify_report(report, fm);
  return report.ok ? 0 : 1;
}

int cmd_example(const std::string& name, int k, long long ell,
                const std::string& out_path) {
  const std::string text = example_spec(name, k, ell);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write: " + out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tameness certificates and finite presentations of "
               "nilpotent-by-abelian semidirect products"};
  app.require_subcommand(1);

  std::string spec_path, pres_path, out_path, name;
  long long mod = 0, quot = 0, ell = 2;
  int k = 1;

  auto* tame = app.add_subcommand("tame", "check the tameness certificate");
  tame->add_option("spec", spec_path, "spec file")->required();

  auto* radius =
      app.add_subcommand("radius", "report covering radii per layer");
  radius->add_option("spec", spec_path, "spec file")->required();

  auto* present =
      app.add_subcommand("present", "assemble the finite presentation");
  present->add_option("spec", spec_path, "spec file")->required();
  present->add_option("-o,--output", out_path,
                      "presentation file (stdout when absent)");

  auto* verify = app.add_subcommand(
      "verify", "evaluate a presentation in a finite quotient model");
  verify->add_option("spec", spec_path, "spec file")->required();
  verify->add_option("presentation", pres_path, "presentation file")
      ->required();
  verify->add_option("--mod", mod, "coefficient modulus (prime)");
  verify->add_option("--quot", quot, "exponent quotient parameter");

  auto* example = app.add_subcommand("example", "print a built-in spec file");
  example->add_option("name", name, "baumslag | heisenberg | free")
      ->required();
  example->add_option("--k", k, "rank parameter");
  example->add_option("--ell", ell, "central annihilator constant");
  example->add_option("-o,--output", out_path, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(tame)) return cmd_tame(spec_path);
    if (app.got_subcommand(radius)) return cmd_radius(spec_path);
    if (app.got_subcommand(present)) return cmd_present(spec_path, out_path);
    if (app.got_subcommand(verify))
      return cmd_verify(spec_path, pres_path, mod, quot);
    if (app.got_subcommand(example))
      return cmd_example(name, k, ell, out_path);
  } catch (const tamepres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

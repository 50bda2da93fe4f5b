#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polystab/oracle.hpp"
#include "polystab/parse.hpp"
#include "report.hpp"

namespace {

using namespace polystab;
using cli::AnalysisReport;
using cli::Json;

struct InputOpts {
  std::string poly;
  std::string coeffs;
  std::string file;
  bool json = false;
};

struct VerifyOpts {
  bool verify = false;
  unsigned precision = 128;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  auto* p = cmd->add_option("--poly", in.poly, "polynomial, e.g. \"x^3 + 3x^2 + 3x + 1\"");
  auto* c = cmd->add_option("--coeffs", in.coeffs, "comma-separated coefficients, highest first");
  auto* f = cmd->add_option("--file", in.file, "file with one polynomial per line");
  p->excludes(c)->excludes(f);
  c->excludes(f);
  cmd->add_flag("--json", in.json, "machine-readable report");
}

void add_verify_flags(CLI::App* cmd, VerifyOpts& v) {
  cmd->add_flag("--verify", v.verify, "cross-check against the numeric root finder");
  cmd->add_option("--precision", v.precision, "numeric working precision in bits")
      ->default_val(128);
}

std::vector<Polynomial> gather_inputs(const InputOpts& in) {
  std::vector<Polynomial> out;
  if (!in.poly.empty()) {
    out.push_back(parse_polynomial(in.poly));
  } else if (!in.coeffs.empty()) {
    out.push_back(parse_coefficient_list(in.coeffs));
  } else if (!in.file.empty()) {
    std::ifstream is(in.file);
    if (!is) throw std::ios_base::failure("cannot open " + in.file);
    std::string line;
    while (std::getline(is, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(parse_polynomial(line));
    }
    if (out.empty()) throw std::ios_base::failure("no polynomials in " + in.file);
  } else {
    throw CLI::RequiredError("--poly, --coeffs or --file");
  }
  return out;
}

// Shift a pole endpoint into the interval until no further root of P sits
// between the original and the shifted value.
Rational nudge_endpoint(const Polynomial& P, const Rational& v, int dir) {
  Rational eps(1);
  for (int i = 0; i < 512; ++i, eps /= 2) {
    Rational w = v + dir * eps;
    if (P.eval(w) == 0) continue;
    int inside = dir > 0 ? count_real_roots(P, Endpoint::at(v), Endpoint::at(w))
                         : count_real_roots(P, Endpoint::at(w), Endpoint::at(v)) - 1;
    if (inside == 0) return w;
  }
  throw Error(Errc::InternalAssertion, "endpoint shift did not settle");
}

Json verify_block(const Polynomial& f, unsigned precision) {
  HalfPlaneCount exact = half_plane_counts(f);
  HalfPlaneCount numeric = numeric_half_plane_counts(f, precision);
  Json j;
  j["precision_bits"] = precision;
  j["numeric_counts"] = cli::counts_json(numeric);
  j["agreement"] = exact == numeric;
  return j;
}

void emit(const std::vector<AnalysisReport>& reports, bool json,
          const std::vector<std::string>& texts) {
  if (json) {
    if (reports.size() == 1) {
      std::cout << reports.front().to_json().dump(2) << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (reports.size() > 1) std::cout << "== " << reports[i].input << "\n";
      std::cout << texts[i] << "\n";
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact polynomial stability and root-structure analysis"};
  app.require_subcommand(1);

  InputOpts in;
  VerifyOpts vo;
  std::string spectrum_text, theta_text, phi_text;
  bool nudge = false;

  auto* analyze = app.add_subcommand("analyze", "run every applicable analysis");
  add_input_flags(analyze, in);
  add_verify_flags(analyze, vo);

  auto* stability = app.add_subcommand("stability", "Hurwitz stability test");
  add_input_flags(stability, in);
  add_verify_flags(stability, vo);

  auto* counts = app.add_subcommand("counts", "root counts by half-plane");
  add_input_flags(counts, in);
  add_verify_flags(counts, vo);
  counts->add_option("--theta", theta_text, "lower endpoint for an index computation");
  counts->add_option("--phi", phi_text, "upper endpoint for an index computation");
  counts->add_flag("--nudge", nudge, "auto-shift an endpoint that lands on a pole");

  auto* interlace = app.add_subcommand("interlace", "interlacing certificate");
  add_input_flags(interlace, in);

  auto* signs = app.add_subcommand("signs", "coefficient sign patterns");
  add_input_flags(signs, in);

  auto* newton = app.add_subcommand("newton", "Newton-like inequality check");
  add_input_flags(newton, in);

  auto* niep = app.add_subcommand("niep", "spectrum realizability");
  niep->add_option("--spectrum", spectrum_text, "comma-separated eigenvalues, e.g. \"2, -1+1i, -1-1i\"")
      ->required();
  niep->add_flag("--json", in.json, "machine-readable report");

  auto* isolate = app.add_subcommand("isolate", "certified real-root isolation");
  add_input_flags(isolate, in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (niep->parsed()) {
    SpectrumCandidate sigma{parse_spectrum(spectrum_text)};
    RealizationResult res = laffey_smigoc_check(sigma);
    AnalysisReport rep;
    for (std::size_t i = 0; i < sigma.entries.size(); ++i)
      rep.input += (i ? ", " : "") + cli::gaussian_text(sigma.entries[i]);
    rep.add("niep", cli::niep_json(res));
    emit({rep}, in.json, {cli::niep_text(res)});
    return 0;
  }

  std::vector<AnalysisReport> reports;
  std::vector<std::string> texts;
  for (const Polynomial& f : gather_inputs(in)) {
    AnalysisReport rep;
    rep.input = f.to_string();
    std::string text;

    if (counts->parsed()) {
      HalfPlaneCount c = half_plane_counts(f);
      rep.add("counts", cli::counts_json(c));
      text = cli::counts_text(c);
      if (!theta_text.empty() || !phi_text.empty()) {
        auto [P, Q] = hb_polynomials(f.monic());
        Endpoint theta = Endpoint::neg_inf(), phi = Endpoint::pos_inf();
        Json ij;
        if (!theta_text.empty()) {
          Rational v = parse_rational(theta_text);
          if (nudge && P.eval(v) == 0) v = nudge_endpoint(P, v, +1);
          theta = Endpoint::at(v);
          ij["theta"] = cli::rational_text(v);
        }
        if (!phi_text.empty()) {
          Rational v = parse_rational(phi_text);
          if (nudge && P.eval(v) == 0) v = nudge_endpoint(P, v, -1);
          phi = Endpoint::at(v);
          ij["phi"] = cli::rational_text(v);
        }
        int idx = cauchy_index(Q, P, theta, phi);
        ij["index"] = idx;
        rep.add("cauchy_index", ij);
        text += "\nindex over the requested interval: " + std::to_string(idx);
      }
      if (vo.verify) {
        Json vb = verify_block(f, vo.precision);
        rep.add("verify", vb);
        text += std::string("\nnumeric cross-check: ") +
                (vb["agreement"].get<bool>() ? "agrees" : "DISAGREES");
      }
    } else if (stability->parsed()) {
      StabilityReport sr = is_hurwitz_stable(f);
      rep.add("stability", cli::stability_json(sr));
      text = cli::stability_text(sr);
      if (vo.verify) {
        Json vb = verify_block(f, vo.precision);
        rep.add("verify", vb);
        text += std::string("\nnumeric cross-check: ") +
                (vb["agreement"].get<bool>() ? "agrees" : "DISAGREES");
      }
    } else if (interlace->parsed()) {
      InterlacingCertificate cert = interlacing_certificate(f);
      try {
        cert = obs36_extensions(f, cert);
      } catch (const Error& e) {
        if (e.code() != Errc::NotApplicable) throw;
      }
      rep.add("interlacing", cli::certificate_json(cert));
      text = cli::certificate_text(cert);
    } else if (signs->parsed()) {
      Polynomial m = f.monic();
      rep.add("signs", cli::signs_json(m));
      text = cli::signs_text(m);
    } else if (newton->parsed()) {
      NewtonEqualityClass nc = newton_like(f.monic());
      rep.add("newton", cli::newton_json(nc));
      text = cli::newton_text(nc);
    } else if (isolate->parsed()) {
      auto roots = isolate_real_roots(f);
      rep.add("real_roots", cli::roots_json(roots));
      text = cli::roots_text(roots);
    } else {  // analyze
      HalfPlaneCount c = half_plane_counts(f);
      rep.add("counts", cli::counts_json(c));
      text = cli::counts_text(c);

      StabilityReport sr = is_hurwitz_stable(f);
      rep.add("stability", cli::stability_json(sr));
      text += "\n" + cli::stability_text(sr);

      if (c.n_zero < f.degree()) {
        InterlacingCertificate cert = interlacing_certificate(f);
        try {
          cert = obs36_extensions(f, cert);
        } catch (const Error& e) {
          if (e.code() != Errc::NotApplicable) throw;
        }
        rep.add("interlacing", cli::certificate_json(cert));
        text += "\n" + cli::certificate_text(cert);
      }

      Polynomial m = f.monic();
      rep.add("signs", cli::signs_json(m));
      text += "\n" + cli::signs_text(m);

      if (m.degree() >= 3) {
        NewtonEqualityClass nc = newton_like(m);
        rep.add("newton", cli::newton_json(nc));
        text += "\n" + cli::newton_text(nc);
      }

      auto roots = isolate_real_roots(f);
      rep.add("real_roots", cli::roots_json(roots));
      text += "\nreal roots:\n" + cli::roots_text(roots);

      if (vo.verify) {
        Json vb = verify_block(f, vo.precision);
        rep.add("verify", vb);
        text += std::string("\nnumeric cross-check: ") +
                (vb["agreement"].get<bool>() ? "agrees" : "DISAGREES");
      }
    }

    reports.push_back(std::move(rep));
    texts.push_back(std::move(text));
  }

  emit(reports, in.json, texts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const polystab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const polystab::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

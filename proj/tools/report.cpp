#include "report.hpp"

#include <sstream>

namespace polystab::cli {

namespace {

const char* verdict_name(ParitySignPattern::Verdict v) {
  switch (v) {
    case ParitySignPattern::Verdict::AllPositive: return "AllPositive";
    case ParitySignPattern::Verdict::OneSwitch: return "OneSwitch";
    case ParitySignPattern::Verdict::AllNegative: return "AllNegative";
    case ParitySignPattern::Verdict::AllZero: return "AllZero";
    case ParitySignPattern::Verdict::NoPattern: return "NoPattern";
  }
  return "?";
}

const char* class_name(NewtonEqualityClass::Classification c) {
  switch (c) {
    case NewtonEqualityClass::Classification::ZeroRootHighMult: return "ZeroRootHighMult";
    case NewtonEqualityClass::Classification::AllImaginary: return "AllImaginary";
    case NewtonEqualityClass::Classification::DegenerateForm: return "DegenerateForm";
    case NewtonEqualityClass::Classification::StrictInequality: return "StrictInequality";
  }
  return "?";
}

const char* failed_name(RealizationResult::FailedCondition c) {
  switch (c) {
    case RealizationResult::FailedCondition::SumNonneg: return "SumNonneg";
    case RealizationResult::FailedCondition::SumOfSquares: return "SumOfSquares";
    case RealizationResult::FailedCondition::SelfConjugate: return "SelfConjugate";
    case RealizationResult::FailedCondition::RealPartSigns: return "RealPartSigns";
  }
  return "?";
}

Json pattern_json(const ParitySignPattern& p) {
  Json j;
  j["parity"] = p.parity == Parity::Even ? "even" : "odd";
  j["last_nonzero_index"] = p.t;
  j["verdict"] = verdict_name(p.verdict);
  if (p.verdict == ParitySignPattern::Verdict::OneSwitch) {
    j["switch_index"] = p.switch_index;
    j["zero_at_switch"] = p.zero_at_switch;
  }
  return j;
}

}  // namespace

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

std::string gaussian_text(const GaussianRational& z) {
  if (z.im == 0) return rational_text(z.re);
  std::ostringstream out;
  if (z.re != 0) out << z.re << (z.im < 0 ? " - " : " + ") << rational_abs(z.im) << "i";
  else out << z.im << "i";
  return out.str();
}

std::string root_text(const AlgebraicRoot& r) { return r.to_string(); }

Json root_json(const AlgebraicRoot& r) {
  Json j;
  if (r.is_exact()) {
    j["exact"] = rational_text(r.exact_value());
  } else {
    j["defining"] = r.defining().to_string();
    j["interval"] = Json::array({rational_text(r.lo()), rational_text(r.hi())});
  }
  j["multiplicity"] = r.multiplicity();
  return j;
}

Json roots_json(const std::vector<AlgebraicRoot>& roots) {
  Json arr = Json::array();
  for (const auto& r : roots) arr.push_back(root_json(r));
  return arr;
}

Json counts_json(const HalfPlaneCount& c) {
  Json j;
  j["n_plus"] = c.n_plus;
  j["n_minus"] = c.n_minus;
  j["n_zero"] = c.n_zero;
  return j;
}

Json stability_json(const StabilityReport& rep) {
  Json j;
  j["stable"] = rep.stable;
  j["counts"] = counts_json(rep.counts);
  Json cond;
  cond["real_distinct"] = rep.cond_real_distinct;
  cond["leading_signs"] = rep.cond_leading_signs;
  cond["interleaving"] = rep.cond_interleaving;
  j["conditions"] = cond;
  j["witnesses"] = roots_json(rep.witnesses);
  return j;
}

Json certificate_json(const InterlacingCertificate& cert) {
  Json j;
  j["d"] = cert.d;
  j["mu"] = roots_json(cert.mu);
  j["nu"] = roots_json(cert.nu);
  j["strict"] = cert.strict;
  j["nu_pre"] = cert.nu_pre ? root_json(*cert.nu_pre) : Json(nullptr);
  j["nu_post"] = cert.nu_post ? root_json(*cert.nu_post) : Json(nullptr);
  return j;
}

Json signs_json(const Polynomial& f) {
  auto [bound, note] = descartes_bound(f);
  Json j;
  j["descartes_bound"] = bound;
  j["descartes_note"] = note;
  j["even_pattern"] = pattern_json(parity_sign_pattern(f, Parity::Even));
  j["odd_pattern"] = pattern_json(parity_sign_pattern(f, Parity::Odd));
  j["parity_shapes_ok"] = check_thm41(f);
  j["negative_chain_ok"] = check_thm46(f);
  return j;
}

Json newton_json(const NewtonEqualityClass& nc) {
  Json j;
  j["holds"] = nc.holds;
  Json pairs = Json::array();
  for (const auto& p : nc.equality_pairs) {
    Json pj;
    pj["k"] = p.k;
    pj["l"] = p.l;
    Json cls = Json::array();
    for (auto c : p.classes) cls.push_back(class_name(c));
    pj["classes"] = cls;
    pairs.push_back(pj);
  }
  j["equality_pairs"] = pairs;
  return j;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(rational_text(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json niep_json(const RealizationResult& res) {
  Json j;
  j["realizable"] = res.realizable;
  j["failed_condition"] = res.failed_condition ? Json(failed_name(*res.failed_condition))
                                               : Json(nullptr);
  j["alpha"] = res.alpha ? Json(rational_text(*res.alpha)) : Json(nullptr);
  j["matrix"] = res.matrix ? matrix_json(*res.matrix) : Json(nullptr);
  return j;
}

std::string counts_text(const HalfPlaneCount& c) {
  std::ostringstream out;
  out << "counts: n+ = " << c.n_plus << ", n- = " << c.n_minus << ", n0 = " << c.n_zero;
  return out.str();
}

std::string stability_text(const StabilityReport& rep) {
  std::ostringstream out;
  out << (rep.stable ? "STABLE" : "UNSTABLE") << "\n";
  out << "  " << counts_text(rep.counts) << "\n";
  out << "  roots real and distinct: " << (rep.cond_real_distinct ? "yes" : "no") << "\n";
  out << "  leading signs agree:     " << (rep.cond_leading_signs ? "yes" : "no") << "\n";
  out << "  strict interleaving:     " << (rep.cond_interleaving ? "yes" : "no");
  if (!rep.witnesses.empty()) {
    out << "\n  witness chain:";
    for (const auto& w : rep.witnesses) out << " " << w.to_string();
  }
  return out.str();
}

std::string certificate_text(const InterlacingCertificate& cert) {
  std::ostringstream out;
  out << "d = " << cert.d << (cert.strict ? " (strict)" : "") << "\n";
  out << "  mu:";
  for (const auto& r : cert.mu) out << " " << r.to_string();
  out << "\n  nu:";
  for (const auto& r : cert.nu) out << " " << r.to_string();
  if (cert.nu_pre) out << "\n  nu_pre:  " << cert.nu_pre->to_string();
  if (cert.nu_post) out << "\n  nu_post: " << cert.nu_post->to_string();
  return out.str();
}

namespace {
std::string pattern_text(const ParitySignPattern& p) {
  std::ostringstream out;
  out << (p.parity == Parity::Even ? "even" : "odd") << ": " << verdict_name(p.verdict);
  if (p.verdict == ParitySignPattern::Verdict::OneSwitch) {
    out << " at index " << p.switch_index << (p.zero_at_switch ? " (zero at switch)" : "");
  }
  return out.str();
}
}  // namespace

std::string signs_text(const Polynomial& f) {
  auto [bound, note] = descartes_bound(f);
  std::ostringstream out;
  out << "sign changes: " << bound << " (" << note << ")\n";
  out << "  " << pattern_text(parity_sign_pattern(f, Parity::Even)) << "\n";
  out << "  " << pattern_text(parity_sign_pattern(f, Parity::Odd)) << "\n";
  out << "  parity shapes ok:  " << (check_thm41(f) ? "yes" : "no") << "\n";
  out << "  negative chain ok: " << (check_thm46(f) ? "yes" : "no");
  return out.str();
}

std::string newton_text(const NewtonEqualityClass& nc) {
  std::ostringstream out;
  out << "inequalities hold: " << (nc.holds ? "yes" : "no");
  for (const auto& p : nc.equality_pairs) {
    out << "\n  equality at (k=" << p.k << ", l=" << p.l << "):";
    for (auto c : p.classes) out << " " << class_name(c);
  }
  return out.str();
}

std::string matrix_text(const RationalMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.size(); ++i) {
    out << "  [";
    for (int j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << "]";
    if (i + 1 < m.size()) out << "\n";
  }
  return out.str();
}

std::string niep_text(const RealizationResult& res) {
  std::ostringstream out;
  if (res.realizable) {
    out << "realizable";
    if (res.alpha) out << " (alpha = " << *res.alpha << ")";
    if (res.matrix) out << "\n" << matrix_text(*res.matrix);
  } else {
    out << "not realizable";
    if (res.failed_condition) out << ": " << failed_name(*res.failed_condition);
  }
  return out.str();
}

std::string roots_text(const std::vector<AlgebraicRoot>& roots) {
  if (roots.empty()) return "no real roots";
  std::ostringstream out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out << "\n";
    out << "  " << roots[i].to_string();
  }
  return out.str();
}

Json AnalysisReport::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = input;
  j["analyses"] = analyses;
  for (const auto& name : analyses) j[name] = blocks.at(name);
  return j;
}

}  // namespace polystab::cli

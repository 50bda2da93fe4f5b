#ifndef POLYSTAB_TOOLS_REPORT_HPP
#define POLYSTAB_TOOLS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "polystab/halfplane.hpp"
#include "polystab/niep.hpp"
#include "polystab/signrules.hpp"
#include "polystab/sturm.hpp"

namespace polystab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

std::string rational_text(const Rational& r);
std::string gaussian_text(const GaussianRational& z);

// Exact rationals as "p/q"; interval certificates as "{poly; (lo, hi); mult}".
std::string root_text(const AlgebraicRoot& r);
Json root_json(const AlgebraicRoot& r);
Json roots_json(const std::vector<AlgebraicRoot>& roots);

Json counts_json(const HalfPlaneCount& c);
Json stability_json(const StabilityReport& rep);
Json certificate_json(const InterlacingCertificate& cert);
Json signs_json(const Polynomial& f);
Json newton_json(const NewtonEqualityClass& nc);
Json matrix_json(const RationalMatrix& m);
Json niep_json(const RealizationResult& res);

std::string counts_text(const HalfPlaneCount& c);
std::string stability_text(const StabilityReport& rep);
std::string certificate_text(const InterlacingCertificate& cert);
std::string signs_text(const Polynomial& f);
std::string newton_text(const NewtonEqualityClass& nc);
std::string matrix_text(const RationalMatrix& m);
std::string niep_text(const RealizationResult& res);
std::string roots_text(const std::vector<AlgebraicRoot>& roots);

// Top-level envelope: echoes the input and lists the analyses run, with one
// result block per analysis, in a deterministic key order.
struct AnalysisReport {
  std::string input;
  std::vector<std::string> analyses;
  Json blocks = Json::object();

  void add(const std::string& name, Json block) {
    analyses.push_back(name);
    blocks[name] = std::move(block);
  }
  Json to_json() const;
};

}  // namespace polystab::cli

#endif

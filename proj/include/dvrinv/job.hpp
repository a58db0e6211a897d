#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dvrinv/dvr.hpp"

namespace dvrinv {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Parsed and validated job document. Scalar strings are stored in canonical
// form, so serialize followed by parse is the identity.
struct JobSpec {
  DvrDescriptor dvr;
  std::size_t n = 0;
  std::vector<std::vector<std::vector<std::string>>> generators;
  std::uint32_t degree_bound = 0;  // |G| when the document omits it
  std::uint64_t closure_cap = 20000;
  std::vector<std::string> checks{"certify"};

  bool operator==(const JobSpec&) const = default;
};

const std::vector<std::string>& known_checks();

// Throws InputError with a field locus ("generators[0][1][0]: ...").
JobSpec parse_jobspec(const Json& document);
JobSpec parse_jobspec_text(std::string_view text);
Json serialize(const JobSpec& spec);

enum class ReportFormat { Json, Text };

struct RunResult {
  Json report;
  int exit_code = 0;
};

// Exit codes: 0 certified or complete, 2 refuted hypothesis, 3 inconclusive.
RunResult run(const JobSpec& spec);

// Human-readable rendering of a report produced by run().
std::string render_text(const Json& report);

// Report without the timing field, for determinism comparisons.
Json strip_timing(Json report);

std::vector<std::string> example_names();
JobSpec example(std::string_view name);

struct VerifyResult {
  bool consistent = true;
  std::vector<std::string> checked;
  std::vector<std::string> failures;
};

// Rechecks the numeric identities recorded in a report: degree product,
// reflection count, Hilbert series against the Molien coefficients, graded
// table equality, H^1 zeros, and the eigen-relations of each recorded basis.
VerifyResult verify_report(const Json& report);

}  // namespace dvrinv

#include "dvrinv/job.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "dvrinv/certify.hpp"
#include "dvrinv/errors.hpp"

namespace dvrinv {

namespace {

std::string locus_index(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

[[noreturn]] void fail(const std::string& locus, const std::string& message) {
  throw InputError(locus + ": " + message);
}

std::uint64_t require_unsigned(const Json& v, const std::string& locus, std::uint64_t minimum) {
  if (!v.is_number_integer()) fail(locus, "expected an integer");
  if (v.is_number_unsigned()) {
    const auto x = v.get<std::uint64_t>();
    if (x < minimum) fail(locus, "must be at least " + std::to_string(minimum));
    return x;
  }
  const auto x = v.get<std::int64_t>();
  if (x < static_cast<std::int64_t>(minimum)) fail(locus, "must be at least " + std::to_string(minimum));
  return static_cast<std::uint64_t>(x);
}

DvrDescriptor parse_descriptor(const Json& v, const std::string& locus) {
  if (!v.is_object()) fail(locus, "expected an object with \"kind\" and \"p\"");
  for (const auto& [key, _] : v.items())
    if (key != "kind" && key != "p") fail(locus + "." + key, "unknown field");
  if (!v.contains("kind") || !v["kind"].is_string()) fail(locus + ".kind", "expected a string");
  if (!v.contains("p") || !v["p"].is_number_integer()) fail(locus + ".p", "expected an integer");
  DvrKind kind;
  try {
    kind = parse_dvr_kind(v["kind"].get<std::string>());
  } catch (const Error& e) {
    fail(locus + ".kind", e.what());
  }
  try {
    return DvrDescriptor::make(kind, v["p"].get<std::int64_t>());
  } catch (const Error& e) {
    fail(locus + ".p", e.what());
  }
}

Json descriptor_json(const DvrDescriptor& d) {
  return Json{{"kind", to_string(d.kind)}, {"p", d.p}};
}

template <Dvr D>
Matrix<typename D::Fraction> parse_matrix(const D& dvr, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vector<typename D::Fraction>> out;
  for (const auto& row : rows) {
    Vector<typename D::Fraction> r;
    for (const auto& s : row) r.push_back(dvr.parse(s));
    out.push_back(std::move(r));
  }
  return Matrix<typename D::Fraction>::from_rows(dvr.fraction_field(), out);
}

template <Dvr D>
std::vector<Matrix<typename D::Fraction>> parse_generators(const D& dvr, const JobSpec& spec) {
  std::vector<Matrix<typename D::Fraction>> out;
  for (const auto& g : spec.generators) out.push_back(parse_matrix(dvr, g));
  return out;
}

template <Dvr D>
std::vector<std::vector<std::string>> canonical_generator(const D& dvr, const Json& m, const std::string& locus,
                                                          std::size_t n) {
  if (!m.is_array() || m.size() != n) fail(locus, "expected " + std::to_string(n) + " rows (generators are n x n)");
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_locus = locus_index(locus, i);
    const auto& row = m[i];
    if (!row.is_array() || row.size() != n) fail(row_locus, "expected " + std::to_string(n) + " entries");
    std::vector<std::string> r;
    for (std::size_t j = 0; j < n; ++j) {
      const auto entry_locus = locus_index(row_locus, j);
      if (!row[j].is_string()) fail(entry_locus, "scalars must be strings");
      const auto x = [&] {
        try {
          return parse_integral(dvr, row[j].get<std::string>());
        } catch (const Error& e) {
          fail(entry_locus, e.what());
        }
      }();
      r.push_back(dvr.format(x));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

template <Dvr D>
void fill_generators(const D& dvr, const Json& doc, JobSpec& spec) {
  const auto& gens = doc["generators"];
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto locus = locus_index("generators", g);
    spec.generators.push_back(canonical_generator(dvr, gens[g], locus, spec.n));
    const auto m = parse_matrix(dvr, spec.generators.back());
    const auto d = det(m);
    if (!dvr.is_unit(d)) fail(locus, "determinant " + dvr.format(d) + " is not a unit of O (not in GL_n(O))");
  }
  if (!doc.contains("degree_bound")) {
    try {
      const auto group = generate_group(dvr, spec.n, parse_generators(dvr, spec), spec.closure_cap);
      spec.degree_bound = static_cast<std::uint32_t>(group.order());
    } catch (const Error& e) {
      fail("generators", e.what());
    }
  }
}

CheckSet check_set(const std::vector<std::string>& names) {
  CheckSet c;
  for (const auto& name : names) {
    if (name == "reflections") c.reflections = true;
    else if (name == "eta") c.eta = true;
    else if (name == "basis") c.basis = true;
    else if (name == "molien") c.molien = true;
    else if (name == "invariants") c.invariants = true;
    else if (name == "graded") c.graded = true;
    else if (name == "h1") c.h1 = true;
    else if (name == "certify") c = CheckSet::all();
  }
  return c;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Certified:
    case Verdict::Complete:
      return 0;
    case Verdict::RefutedHypothesis:
      return 2;
    case Verdict::Inconclusive:
      return 3;
  }
  return 3;
}

template <Dvr D>
Json matrix_json(const D& dvr, const Matrix<typename D::Fraction>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(dvr.format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <FieldElement E>
Json polys_json(const std::vector<MultiPoly<E>>& polys) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

template <FieldElement E>
Json fundamental_json(const FundamentalInvariants<E>& f) {
  return Json{{"degrees", f.degrees},
              {"generators", polys_json(f.generators)},
              {"complete", f.complete},
              {"degree_product_ok", f.degree_product_ok},
              {"reflection_sum_ok", f.reflection_sum_ok},
              {"jacobian_ok", f.jacobian_ok},
              {"generation_ok", f.generation_ok},
              {"issues", f.issues}};
}

template <Dvr D>
Json report_json(const D& dvr, const MatrixGroup<D>& group, const RegularityCertificate<D>& cert) {
  Json r;
  r["verdict"] = to_string(cert.verdict);
  r["group_order"] = cert.group_order;
  r["n"] = cert.n;
  r["degree_bound"] = cert.degree_bound;
  r["hypothesis"] = Json{{"order_invertible", cert.hypothesis_ok}, {"message", cert.hypothesis_message}};
  if (cert.reflections) {
    Json list = Json::array();
    for (const auto& e : cert.reflections->reflections) {
      list.push_back(Json{{"index", e.index},
                          {"lambda", dvr.format(e.lambda)},
                          {"order", e.order},
                          {"matrix", matrix_json(dvr, group.elements()[e.index])}});
    }
    r["reflections"] = std::move(list);
    r["reflection_count"] = cert.reflections->reflections.size();
    r["generated_by_reflections"] = cert.reflections->generated_by_reflections;
  }
  if (cert.eta_injective) r["eta_injective"] = *cert.eta_injective;
  if (cert.reduced) {
    r["reduced_group"] = Json{{"order", cert.reduced->image_order},
                              {"reflection_count", cert.reduced->reflection_count},
                              {"generated_by_reflections", cert.reduced->generated_by_reflections}};
  }
  if (!cert.bases.empty()) {
    Json list = Json::array();
    for (std::size_t i = 0; i < cert.bases.size(); ++i) {
      const auto& b = cert.bases[i];
      Json vectors = Json::array();
      for (std::size_t j = 0; j < b.basis.cols(); ++j) {
        Json v = Json::array();
        for (const auto& x : b.basis.column(j)) v.push_back(dvr.format(x));
        vectors.push_back(std::move(v));
      }
      list.push_back(Json{{"reflection", i},
                          {"vectors", std::move(vectors)},
                          {"lambda", dvr.format(b.lambda)},
                          {"order", b.order},
                          {"lambda_order", b.lambda_order},
                          {"verified", b.verified},
                          {"issues", b.issues}});
    }
    r["bases"] = std::move(list);
  }
  if (cert.fundamental_residue) {
    r["fundamental_degrees_k"] = cert.fundamental_residue->degrees;
    r["fundamental_k"] = fundamental_json(*cert.fundamental_residue);
  }
  if (cert.fundamental_fraction) {
    r["fundamental_degrees_K"] = cert.fundamental_fraction->degrees;
    r["fundamental_K"] = fundamental_json(*cert.fundamental_fraction);
  }
  if (cert.degrees_agree) r["degrees_agree"] = *cert.degrees_agree;
  if (!cert.graded_table.empty()) {
    Json rows = Json::array();
    for (const auto& row : cert.graded_table) rows.push_back(Json::array({row.degree, row.dim_fraction, row.dim_residue}));
    r["graded_table"] = std::move(rows);
  }
  if (cert.molien) {
    Json coeffs = Json::array();
    for (const auto& c : cert.molien->coefficients) coeffs.push_back(dvr.format(c));
    r["molien"] = std::move(coeffs);
  }
  if (!cert.hilbert.empty()) {
    Json coeffs = Json::array();
    for (auto h : cert.hilbert) coeffs.push_back(std::to_string(h));
    r["hilbert"] = std::move(coeffs);
  }
  if (cert.molien_matches_hilbert) r["molien_matches_hilbert"] = *cert.molien_matches_hilbert;
  if (cert.molien_matches_dimensions) r["molien_matches_dimensions"] = *cert.molien_matches_dimensions;
  if (!cert.h1.empty()) {
    Json k = Json::array();
    Json big_k = Json::array();
    for (const auto& row : cert.h1) {
      k.push_back(Json::array({row.degree, row.dim_residue}));
      big_k.push_back(Json::array({row.degree, row.dim_fraction}));
    }
    r["h1"] = std::move(k);
    r["h1_K"] = std::move(big_k);
  }
  if (cert.lift) {
    r["lift_verified"] = cert.lift->verified;
    r["lifts"] = polys_json(cert.lift->lifts);
    r["lift_issues"] = cert.lift->issues;
  }
  r["notes"] = cert.notes;
  return r;
}

template <Dvr D>
RunResult run_with(const D& dvr, const JobSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const auto group = generate_group(dvr, spec.n, parse_generators(dvr, spec), spec.closure_cap);
  const auto cert = analyze(group, spec.degree_bound, check_set(spec.checks));
  RunResult out;
  out.report["tool"] = Json{{"name", "dvrinv"}, {"version", kToolVersion}};
  out.report["job"] = serialize(spec);
  out.report.update(report_json(dvr, group, cert));
  const auto elapsed = std::chrono::steady_clock::now() - start;
  out.report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  out.exit_code = exit_code(cert.verdict);
  return out;
}

// Power series of prod (1 - z^d)^-1 truncated at z^bound.
std::vector<std::int64_t> hilbert_series(const std::vector<std::uint32_t>& degrees, std::size_t bound) {
  std::vector<std::int64_t> c(bound + 1, 0);
  c[0] = 1;
  for (auto d : degrees) {
    if (d == 0) continue;
    for (std::size_t i = d; i <= bound; ++i) c[i] += c[i - d];
  }
  return c;
}

template <Dvr D>
void verify_with(const D& dvr, const Json& report, VerifyResult& out) {
  using K = typename D::Fraction;
  const auto kf = dvr.fraction_field();
  auto check = [&](bool ok, const std::string& what) {
    out.checked.push_back(what);
    if (!ok) {
      out.failures.push_back(what);
      out.consistent = false;
    }
  };
  auto scalar = [&](const Json& v, const std::string& locus) -> K {
    if (!v.is_string()) fail(locus, "scalars must be strings");
    try {
      return dvr.parse(v.get<std::string>());
    } catch (const Error& e) {
      fail(locus, e.what());
    }
  };
  auto degrees_of = [&](const char* key) {
    std::vector<std::uint32_t> d;
    for (const auto& x : report[key]) d.push_back(x.get<std::uint32_t>());
    return d;
  };

  const auto order = report.at("group_order").get<std::uint64_t>();
  const auto verdict = report.at("verdict").get<std::string>();
  std::optional<std::size_t> reflection_count;
  if (report.contains("reflections")) reflection_count = report["reflections"].size();

  for (const char* key : {"fundamental_degrees_k", "fundamental_degrees_K"}) {
    if (!report.contains(key)) continue;
    const auto degrees = degrees_of(key);
    bool complete = degrees.size() == report.at("n").get<std::size_t>();
    std::uint64_t product = 1;
    std::size_t excess = 0;
    for (auto d : degrees) {
      product *= d;
      excess += d - 1;
    }
    if (complete || verdict == "certified") {
      check(product == order, std::string(key) + ": product of degrees equals |G|");
      if (reflection_count)
        check(excess == *reflection_count, std::string(key) + ": sum of (d_i - 1) equals the reflection count");
    }
  }
  if (report.contains("fundamental_degrees_k") && report.contains("fundamental_degrees_K") &&
      verdict == "certified")
    check(degrees_of("fundamental_degrees_k") == degrees_of("fundamental_degrees_K"), "degrees agree over k and K");

  std::vector<K> molien;
  if (report.contains("molien")) {
    const auto& m = report["molien"];
    for (std::size_t d = 0; d < m.size(); ++d) molien.push_back(scalar(m[d], locus_index("molien", d)));
    check(!molien.empty() && molien[0] == kf.one(), "molien[0] = 1");
    if (report.contains("fundamental_degrees_k")) {
      const auto degrees = degrees_of("fundamental_degrees_k");
      if (degrees.size() == report.at("n").get<std::size_t>()) {
        const auto h = hilbert_series(degrees, molien.size() - 1);
        bool ok = true;
        for (std::size_t d = 0; d < molien.size(); ++d) ok = ok && molien[d] == kf.from_int(h[d]);
        check(ok, "Molien coefficients equal the series of prod (1 - z^d_i)^-1");
      }
    }
  }
  if (report.contains("graded_table")) {
    bool equal = true;
    bool molien_ok = true;
    for (const auto& row : report["graded_table"]) {
      const auto d = row.at(0).get<std::size_t>();
      const auto dim_big = row.at(1).get<std::int64_t>();
      equal = equal && dim_big == row.at(2).get<std::int64_t>();
      if (d < molien.size()) molien_ok = molien_ok && molien[d] == kf.from_int(dim_big);
    }
    if (verdict == "certified") check(equal, "graded table: dim over K equals dim over k in every degree");
    if (!molien.empty()) check(molien_ok, "Molien coefficients equal the graded dimensions over K");
  }
  if (report.contains("h1") && report.value("hypothesis", Json::object()).value("order_invertible", false)) {
    for (const char* key : {"h1", "h1_K"}) {
      if (!report.contains(key)) continue;
      bool zero = true;
      for (const auto& row : report[key]) zero = zero && row.at(1).get<std::int64_t>() == 0;
      check(zero, std::string(key) + ": all entries vanish when |G| is invertible");
    }
  }
  if (report.contains("bases")) {
    const auto& refl = report.at("reflections");
    for (const auto& b : report["bases"]) {
      const auto i = b.at("reflection").get<std::size_t>();
      const std::string locus = locus_index("bases", i);
      std::vector<std::vector<std::string>> rows;
      for (const auto& row : refl.at(i).at("matrix")) rows.push_back(row.get<std::vector<std::string>>());
      const auto sigma = parse_matrix(dvr, rows);
      std::vector<Vector<K>> columns;
      for (const auto& v : b.at("vectors")) {
        Vector<K> col;
        for (std::size_t j = 0; j < v.size(); ++j) col.push_back(scalar(v[j], locus + ".vectors"));
        columns.push_back(std::move(col));
      }
      DiagonalizingBasis<D> basis;
      basis.basis = Matrix<K>::from_columns(kf, columns);
      basis.lambda = scalar(b.at("lambda"), locus + ".lambda");
      basis.order = b.at("order").get<std::uint64_t>();
      const auto issues = verify_diagonalizing_basis(dvr, sigma, basis);
      check(issues.empty() == b.at("verified").get<bool>(),
            locus + ": eigen-relations and det(T) recheck agree with the recorded verdict");
    }
  }
  if (verdict == "certified") {
    check(report.value("eta_injective", false), "certified report records an injective reduction map");
    check(report.value("lift_verified", false), "certified report records verified lifts");
    check(report.value("generated_by_reflections", false), "certified report records reflection generation");
  }
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"reflections", "eta",   "basis", "molien",
                                              "invariants",  "graded", "h1",   "certify"};
  return names;
}

JobSpec parse_jobspec(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  static const std::vector<std::string> fields{"dvr", "n", "generators", "degree_bound", "closure_cap", "checks"};
  for (const auto& [key, _] : doc.items())
    if (std::find(fields.begin(), fields.end(), key) == fields.end()) fail(key, "unknown field");
  JobSpec spec;
  if (!doc.contains("dvr")) fail("dvr", "missing");
  spec.dvr = parse_descriptor(doc["dvr"], "dvr");
  if (!doc.contains("n")) fail("n", "missing");
  spec.n = require_unsigned(doc["n"], "n", 1);
  if (doc.contains("closure_cap")) spec.closure_cap = require_unsigned(doc["closure_cap"], "closure_cap", 1);
  if (doc.contains("degree_bound"))
    spec.degree_bound = static_cast<std::uint32_t>(require_unsigned(doc["degree_bound"], "degree_bound", 0));
  if (doc.contains("checks")) {
    const auto& checks = doc["checks"];
    if (!checks.is_array() || checks.empty()) fail("checks", "expected a non-empty array of check names");
    spec.checks.clear();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto locus = locus_index("checks", i);
      if (!checks[i].is_string()) fail(locus, "expected a string");
      const auto name = checks[i].get<std::string>();
      if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
        fail(locus, "unknown check name '" + name + "'");
      if (std::find(spec.checks.begin(), spec.checks.end(), name) == spec.checks.end()) spec.checks.push_back(name);
    }
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) fail("generators", "expected an array of matrices");
  std::visit([&](const auto& dvr) { fill_generators(dvr, doc, spec); }, make_dvr(spec.dvr));
  return spec;
}

JobSpec parse_jobspec_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_jobspec(doc);
}

Json serialize(const JobSpec& spec) {
  Json doc;
  doc["dvr"] = descriptor_json(spec.dvr);
  doc["n"] = spec.n;
  doc["generators"] = spec.generators;
  doc["degree_bound"] = spec.degree_bound;
  doc["closure_cap"] = spec.closure_cap;
  doc["checks"] = spec.checks;
  return doc;
}

RunResult run(const JobSpec& spec) {
  return std::visit([&](const auto& dvr) { return run_with(dvr, spec); }, make_dvr(spec.dvr));
}

Json strip_timing(Json report) {
  report.erase("timing_ms");
  return report;
}

std::vector<std::string> example_names() { return {"s2", "s3", "b2", "c4-ratfunc"}; }

JobSpec example(std::string_view name) {
  const char* text = nullptr;
  if (name == "s2") {
    text = R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 2,
               "generators": [[["0","1"],["1","0"]]], "checks": ["certify"]})";
  } else if (name == "s3") {
    text = R"({"dvr": {"kind": "int-localized", "p": 5}, "n": 3,
               "generators": [[["0","1","0"],["1","0","0"],["0","0","1"]],
                              [["1","0","0"],["0","0","1"],["0","1","0"]]],
               "degree_bound": 6, "checks": ["certify"]})";
  } else if (name == "b2") {
    text = R"({"dvr": {"kind": "int-localized", "p": 3}, "n": 2,
               "generators": [[["0","1"],["1","0"]], [["1","0"],["0","-1"]]],
               "degree_bound": 8, "checks": ["certify"]})";
  } else if (name == "c4-ratfunc") {
    text = R"({"dvr": {"kind": "ratfunc-localized", "p": 5}, "n": 1,
               "generators": [[["2"]]], "degree_bound": 4, "checks": ["certify"]})";
  } else {
    std::string known;
    for (const auto& n : example_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown example '" + std::string(name) + "' (known: " + known + ")");
  }
  return parse_jobspec_text(text);
}

VerifyResult verify_report(const Json& report) {
  if (!report.is_object()) fail("document", "expected a report object");
  for (const char* key : {"verdict", "group_order", "n", "job"})
    if (!report.contains(key)) fail(key, "missing from report");
  if (!report["job"].contains("dvr")) fail("job.dvr", "missing from report");
  const auto descriptor = parse_descriptor(report["job"]["dvr"], "job.dvr");
  VerifyResult out;
  try {
    std::visit([&](const auto& dvr) { verify_with(dvr, report, out); }, make_dvr(descriptor));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return out;
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  auto flag = [](const Json& v) { return v.get<bool>() ? "yes" : "no"; };
  auto join = [](const Json& arr) {
    std::string s;
    for (const auto& x : arr) s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
    return "[" + s + "]";
  };
  const auto& job = r.at("job");
  os << "dvrinv " << r.at("tool").at("version").get<std::string>() << "\n";
  os << "ring: " << job.at("dvr").at("kind").get<std::string>() << ", p = " << job.at("dvr").at("p") << "\n";
  os << "n = " << r.at("n") << ", |G| = " << r.at("group_order") << ", degree bound " << r.at("degree_bound") << "\n";
  os << "verdict: " << r.at("verdict").get<std::string>() << "\n";
  const auto& hyp = r.at("hypothesis");
  os << "|G| invertible in O: " << flag(hyp.at("order_invertible"));
  if (!hyp.at("message").get<std::string>().empty()) os << " (" << hyp.at("message").get<std::string>() << ")";
  os << "\n";
  if (r.contains("reflections")) {
    os << "pseudo-reflections: " << r.at("reflection_count") << ", generate G: "
       << flag(r.at("generated_by_reflections")) << "\n";
    for (const auto& e : r["reflections"])
      os << "  element " << e.at("index") << ": lambda = " << e.at("lambda").get<std::string>() << ", order "
         << e.at("order") << "\n";
  }
  if (r.contains("eta_injective")) os << "reduction map injective: " << flag(r["eta_injective"]) << "\n";
  if (r.contains("reduced_group")) {
    const auto& g = r["reduced_group"];
    os << "reduced group: order " << g.at("order") << ", " << g.at("reflection_count")
       << " pseudo-reflections, generated by them: " << flag(g.at("generated_by_reflections")) << "\n";
  }
  if (r.contains("bases")) {
    os << "diagonalizing bases:\n";
    for (const auto& b : r["bases"]) {
      os << "  reflection " << b.at("reflection") << ": ";
      for (const auto& v : b.at("vectors")) os << join(v) << " ";
      os << "lambda = " << b.at("lambda").get<std::string>() << ", verified: " << flag(b.at("verified")) << "\n";
    }
  }
  for (const char* field : {"k", "K"}) {
    const std::string key = std::string("fundamental_") + field;
    if (!r.contains(key)) continue;
    const auto& f = r[key];
    os << "fundamental invariants over " << field << ": degrees " << join(f.at("degrees")) << "\n";
    for (const auto& g : f.at("generators")) os << "  " << g.get<std::string>() << "\n";
    for (const auto& issue : f.at("issues")) os << "  ! " << issue.get<std::string>() << "\n";
  }
  if (r.contains("graded_table")) {
    os << "graded dimensions (d, dim_K, dim_k):\n";
    for (const auto& row : r["graded_table"]) os << "  " << row[0] << "  " << row[1] << "  " << row[2] << "\n";
  }
  if (r.contains("molien")) os << "Molien series: " << join(r["molien"]) << "\n";
  if (r.contains("hilbert")) os << "degree product series: " << join(r["hilbert"]) << "\n";
  if (r.contains("h1")) {
    os << "H^1 (d, over k, over K):\n";
    for (std::size_t i = 0; i < r["h1"].size(); ++i)
      os << "  " << r["h1"][i][0] << "  " << r["h1"][i][1] << "  " << r["h1_K"][i][1] << "\n";
  }
  if (r.contains("lift_verified")) {
    os << "lifts to O verified: " << flag(r["lift_verified"]) << "\n";
    for (const auto& f : r["lifts"]) os << "  " << f.get<std::string>() << "\n";
  }
  for (const auto& note : r.at("notes")) os << "note: " << note.get<std::string>() << "\n";
  return os.str();
}

}  // namespace dvrinv

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dvrinv/errors.hpp"
#include "dvrinv/job.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dvrinv::InputError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dvrinv::InputError("cannot open output file '" + path + "'");
  out << text;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

dvrinv::Json parse_json(const std::string& text, const std::string& what) {
  try {
    return dvrinv::Json::parse(text);
  } catch (const dvrinv::Json::parse_error& e) {
    throw dvrinv::InputError("malformed JSON in " + what + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant-theory checks for finite matrix groups over a discrete valuation ring"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string format = "json";
  std::optional<std::uint32_t> degree_bound;
  std::string checks;
  std::string example_name;

  auto* analyze = app.add_subcommand("analyze", "run the checks requested by a job document");
  analyze->add_option("--input", input, "job document (default: stdin)");
  analyze->add_option("--output", output, "report destination (default: stdout)");
  analyze->add_option("--degree-bound", degree_bound, "override the degree bound D");
  analyze->add_option("--checks", checks, "comma-separated checks overriding the document");
  analyze->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));

  auto* example = app.add_subcommand("example", "print a bundled job document");
  example->add_option("name", example_name, "s2, s3, b2 or c4-ratfunc")->required();
  example->add_option("--output", output, "destination (default: stdout)");

  auto* verify = app.add_subcommand("verify-report", "recheck the numeric identities inside a report");
  verify->add_option("--input", input, "report produced by analyze (default: stdin)");
  verify->add_option("--output", output, "destination (default: stdout)");
  verify->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*example) {
      write_output(output, dvrinv::serialize(dvrinv::example(example_name)).dump(2) + "\n");
      return 0;
    }
    if (*analyze) {
      auto doc = parse_json(read_input(input), "job document");
      if (degree_bound && doc.is_object()) doc["degree_bound"] = *degree_bound;
      if (!checks.empty() && doc.is_object()) doc["checks"] = split_csv(checks);
      const auto spec = dvrinv::parse_jobspec(doc);
      const auto result = dvrinv::run(spec);
      write_output(output, format == "text" ? dvrinv::render_text(result.report) : result.report.dump(2) + "\n");
      return result.exit_code;
    }
    if (*verify) {
      const auto report = parse_json(read_input(input), "report");
      const auto result = dvrinv::verify_report(report);
      if (format == "text") {
        std::ostringstream os;
        for (const auto& c : result.checked) {
          const bool failed =
              std::find(result.failures.begin(), result.failures.end(), c) != result.failures.end();
          os << (failed ? "FAIL  " : "ok    ") << c << "\n";
        }
        os << (result.consistent ? "report consistent\n" : "report inconsistent\n");
        write_output(output, os.str());
      } else {
        dvrinv::Json out{{"consistent", result.consistent}, {"checked", result.checked}, {"failures", result.failures}};
        write_output(output, out.dump(2) + "\n");
      }
      return result.consistent ? 0 : 3;
    }
  } catch (const dvrinv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

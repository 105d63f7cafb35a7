#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliffcert/serialize.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto from = item.find_first_not_of(" \t");
    const auto to = item.find_last_not_of(" \t");
    if (from != std::string::npos) ids.push_back(item.substr(from, to - from + 1));
  }
  return ids;
}

int run_certify(long p, const std::string& format, const std::string& out_path,
                std::size_t cap, bool no_oracle) {
  cliffcert::CertifyOptions options;
  options.cap = cap;
  options.oracle = !no_oracle;
  const cliffcert::Certification cert = cliffcert::certify(p, options);

  std::string text;
  if (format == "json") {
    text = cliffcert::report_to_json(cert.report).dump(2) + "\n";
  } else {
    text = cliffcert::report_to_text(cert.report);
  }
  if (const int rc = emit(text, out_path); rc != 0) return rc;
  return cert.report.all_pass() ? 0 : 1;
}

int run_verify(long p, const std::string& props, const std::string& format,
               const std::string& out_path, std::size_t cap) {
  const std::vector<std::string> ids = split_ids(props);
  if (ids.empty()) {
    std::cerr << "--props needs at least one check id\n";
    return 2;
  }
  cliffcert::CertifyOptions options;
  options.cap = cap;
  const auto results = cliffcert::verify_propositions(p, ids, options);

  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  std::string text;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["p"] = p;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json item;
      item["id"] = r.id;
      item["title"] = r.title;
      item["pass"] = r.pass;
      item["detail"] = r.detail;
      checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = all_pass;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << " " << r.title << ": "
         << r.detail << "\n";
    }
    text = os.str();
  }
  if (const int rc = emit(text, out_path); rc != 0) return rc;
  return all_pass ? 0 : 1;
}

int run_export(long p, const std::string& out_path, std::size_t cap) {
  cliffcert::Workspace ws(p, cap);
  return emit(cliffcert::export_code_data(ws).dump(2) + "\n", out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of a non-stabilizer Clifford code family"};
  app.require_subcommand(1);

  long p = 0;
  std::string format = "text";
  std::string out_path;
  std::string props;
  std::size_t cap = cliffcert::kDefaultClosureCap;
  bool no_oracle = false;

  auto* certify_cmd =
      app.add_subcommand("certify", "run every check for one prime and emit a report");
  certify_cmd->add_option("--p", p, "odd prime qupit dimension")->required();
  certify_cmd->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  certify_cmd->add_option("--out", out_path, "write output to a file");
  certify_cmd->add_option("--cap", cap, "group closure size cap");
  certify_cmd->add_flag("--no-oracle", no_oracle, "skip the floating point oracle");

  auto* verify_cmd = app.add_subcommand("verify", "run a subset of checks by id");
  verify_cmd->add_option("--p", p, "odd prime qupit dimension")->required();
  verify_cmd->add_option("--props", props, "comma separated check ids")->required();
  verify_cmd->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", out_path, "write output to a file");
  verify_cmd->add_option("--cap", cap, "group closure size cap");

  auto* export_cmd =
      app.add_subcommand("export", "emit code bases, projectors and index labels");
  export_cmd->add_option("--p", p, "odd prime qupit dimension")->required();
  export_cmd->add_option("--out", out_path, "write output to a file");
  export_cmd->add_option("--cap", cap, "group closure size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (certify_cmd->parsed()) {
      return run_certify(p, format, out_path, cap, no_oracle);
    }
    if (verify_cmd->parsed()) {
      return run_verify(p, props, format, out_path, cap);
    }
    return run_export(p, out_path, cap);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const cliffcert::CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

// brstlab CLI: ingest a system description (JSON file or stdin), run the
// analysis pipeline, and emit a deterministic report.
//
//   brstlab <check|dsp|physical|compare> [spec.json]
//           [--format json|text] [--tol <float>] [--out <path>]
//
// Exit codes: 0 success, 1 numerical check failure, 2 input/schema error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "brstlab/brstlab.hpp"

namespace {

brstlab::Json select_sections(const brstlab::Json& full,
                              const std::string& command) {
  brstlab::Json out;
  out["checks"] = full["checks"];
  if (command == "check") return out;
  out["dims"] = full["dims"];
  out["spectra"] = full["spectra"];
  if (command == "dsp") return out;
  out["witnesses"] = full["witnesses"];
  if (command == "physical") return out;
  out["verdict"] = full["verdict"];
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"brstlab: finite-dimensional BRST constraint analysis"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string format = "json";
  std::string out_path;
  double tol_flag = -1.0;

  std::string command;
  for (const char* name : {"check", "dsp", "physical", "compare"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("spec", spec_path, "system spec JSON (default: stdin)");
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tol", tol_flag, "absolute tolerance override");
    sub->add_option("--out", out_path, "output path (default: stdout)");
    sub->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      if (!in) {
        std::cerr << "error: cannot open " << spec_path << "\n";
        return 2;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    }

    brstlab::Json j;
    try {
      j = brstlab::Json::parse(text);
    } catch (const brstlab::Json::parse_error& e) {
      std::cerr << "error: invalid JSON: " << e.what() << "\n";
      return 2;
    }

    // Tolerance precedence: --tol flag > spec file "tol" > BRSTLAB_TOL > default.
    if (!j.contains("tol")) {
      if (const char* env = std::getenv("BRSTLAB_TOL")) {
        j["tol"] = brstlab::Json{{"abs", std::strtod(env, nullptr)}};
      }
    }
    brstlab::SystemSpec spec = brstlab::parse_system_spec(j);
    if (tol_flag >= 0.0) {
      spec.tol.abs = tol_flag;
      spec.tol.validate();
    }

    const brstlab::Report report = brstlab::run_pipeline(spec);

    std::string rendered;
    if (format == "json") {
      rendered = brstlab::emit_json(
          select_sections(brstlab::report_to_json(report), command));
    } else {
      rendered = brstlab::emit_text(report);
    }

    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      out << rendered;
    } else {
      std::cout << rendered;
    }
    return report.all_pass() ? 0 : 1;
  } catch (const brstlab::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const brstlab::Error& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Copyright 2026 The dsx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsx/cli.hpp"

#include <glob.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "dsx/parser.hpp"
#include "dsx/printer.hpp"
#include "dsx/validator.hpp"

namespace dsx::cli {

namespace fs = std::filesystem;

namespace {

bool HasGlobChars(std::string_view s) {
  return s.find_first_of("*?[") != std::string_view::npos;
}

std::optional<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool WriteFile(const fs::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) return false;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  return static_cast<bool>(out);
}

// Parse + validate result for one file.
struct Checked {
  std::optional<ConnectorModel> model;
  std::vector<Diagnostic> diagnostics;
  bool has_errors = false;
  bool has_warnings = false;
};

Checked CheckSource(const std::string& source, const std::string& file) {
  Checked c;
  ParseResult parsed = Parse(source, file);
  c.diagnostics = std::move(parsed.diagnostics);
  if (parsed.model) {
    ValidationReport report = Validate(*parsed.model);
    c.diagnostics.insert(c.diagnostics.end(), report.diagnostics.begin(),
                         report.diagnostics.end());
    c.model = std::move(parsed.model);
  }
  c.has_errors = HasErrors(c.diagnostics);
  c.has_warnings =
      std::any_of(c.diagnostics.begin(), c.diagnostics.end(),
                  [](const Diagnostic& d) { return !d.is_error(); });
  return c;
}

int DiagnosticExit(const Checked& c, bool fail_on_warning) {
  if (c.has_errors || (fail_on_warning && c.has_warnings)) {
    return kExitDiagnostics;
  }
  return kExitOk;
}

void PrintText(const std::vector<Diagnostic>& diags, std::ostream& os) {
  for (const auto& d : diags) os << FormatDiagnostic(d) << '\n';
}

nlohmann::json DiagnosticJson(const Diagnostic& d) {
  return {{"file", d.span.file},         {"line", d.span.line},
          {"column", d.span.column},     {"length", d.span.length},
          {"severity", SeverityName(d.severity)},
          {"code", d.code},              {"message", d.message}};
}

// Shared front half of every subcommand.
std::optional<std::vector<fs::path>> ResolveInputs(const CliConfig& config,
                                                   std::ostream& err) {
  std::vector<std::string> errors;
  auto files = ExpandInputs(config.input_paths, errors);
  for (const auto& e : errors) err << "dsxc: " << e << '\n';
  if (files.empty()) {
    err << "dsxc: no input files\n";
    return std::nullopt;
  }
  return files;
}

}  // namespace

std::vector<fs::path> ExpandInputs(const std::vector<std::string>& inputs,
                                   std::vector<std::string>& errors) {
  std::set<fs::path> found;
  for (const std::string& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      for (auto it = fs::recursive_directory_iterator(input, ec);
           !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".dsx") {
          found.insert(it->path());
        }
      }
      continue;
    }
    if (fs::exists(input, ec) || !HasGlobChars(input)) {
      // Missing plain paths are kept so the read step reports them.
      found.insert(fs::path(input));
      continue;
    }
    glob_t matches{};
    const int rc = ::glob(input.c_str(), 0, nullptr, &matches);
    if (rc == 0) {
      for (size_t i = 0; i < matches.gl_pathc; ++i) {
        fs::path p(matches.gl_pathv[i]);
        if (fs::is_regular_file(p, ec)) found.insert(p);
      }
    } else {
      errors.push_back("pattern '" + input + "' matched no files");
    }
    globfree(&matches);
  }
  return {found.begin(), found.end()};
}

int CmdCheck(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto files = ResolveInputs(config, err);
  if (!files) return kExitUsage;

  int worst = kExitOk;
  nlohmann::json all = nlohmann::json::array();
  size_t errors = 0, warnings = 0;
  for (const fs::path& path : *files) {
    auto source = ReadFile(path);
    if (!source) {
      err << "dsxc: cannot read '" << path.string() << "'\n";
      worst = std::max(worst, kExitUsage);
      continue;
    }
    const Checked c = CheckSource(*source, path.string());
    for (const auto& d : c.diagnostics) {
      (d.is_error() ? errors : warnings)++;
      all.push_back(DiagnosticJson(d));
    }
    if (config.report_format == ReportFormat::kText) {
      PrintText(c.diagnostics, out);
    }
    worst = std::max(worst, DiagnosticExit(c, config.fail_on_warning));
  }
  if (config.report_format == ReportFormat::kJson) {
    nlohmann::json report = {{"version", 1},
                             {"files", files->size()},
                             {"errors", errors},
                             {"warnings", warnings},
                             {"diagnostics", std::move(all)}};
    out << report.dump(2, ' ', false, nlohmann::json::error_handler_t::replace)
        << '\n';
  }
  return worst;
}

int CmdGen(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.out_dir.empty()) {
    err << "dsxc: gen requires --out <dir>\n";
    return kExitUsage;
  }
  if (config.targets.empty()) {
    err << "dsxc: gen requires --targets\n";
    return kExitUsage;
  }
  auto files = ResolveInputs(config, err);
  if (!files) return kExitUsage;

  int worst = kExitOk;
  for (const fs::path& path : *files) {
    auto source = ReadFile(path);
    if (!source) {
      err << "dsxc: cannot read '" << path.string() << "'\n";
      worst = std::max(worst, kExitUsage);
      continue;
    }
    const Checked c = CheckSource(*source, path.string());
    PrintText(c.diagnostics, err);
    if (c.has_errors) {
      worst = std::max(worst, kExitDiagnostics);
      continue;
    }
    GenerationBundle bundle;
    try {
      bundle = GenerateAll(*c.model, config.targets);
    } catch (const GenerationError& e) {
      for (const auto& m : e.messages()) {
        err << path.string() << ": error: " << m << '\n';
      }
      worst = std::max(worst, kExitDiagnostics);
      continue;
    }
    const fs::path root = config.out_dir / bundle.source_model;
    for (const auto& artifact : bundle.artifacts) {
      const fs::path target = root / artifact.relative_path;
      if (!WriteFile(target, artifact.content)) {
        err << "dsxc: cannot write '" << target.string() << "'\n";
        worst = std::max(worst, kExitUsage);
        continue;
      }
      out << target.generic_string() << '\n';
    }
    worst = std::max(worst, DiagnosticExit(c, config.fail_on_warning));
  }
  return worst;
}

int CmdFmt(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto files = ResolveInputs(config, err);
  if (!files) return kExitUsage;

  int worst = kExitOk;
  for (const fs::path& path : *files) {
    auto source = ReadFile(path);
    if (!source) {
      err << "dsxc: cannot read '" << path.string() << "'\n";
      worst = std::max(worst, kExitUsage);
      continue;
    }
    ParseResult parsed = Parse(*source, path.string());
    if (!parsed.model) {
      PrintText(parsed.diagnostics, err);
      worst = std::max(worst, kExitDiagnostics);
      continue;
    }
    const std::string canonical = PrintCanonical(*parsed.model);
    if (canonical == *source) continue;
    if (config.check_only) {
      out << "would reformat " << path.string() << '\n';
      worst = std::max(worst, kExitDiagnostics);
      continue;
    }
    if (!WriteFile(path, canonical)) {
      err << "dsxc: cannot write '" << path.string() << "'\n";
      worst = std::max(worst, kExitUsage);
      continue;
    }
    out << "formatted " << path.string() << '\n';
  }
  return worst;
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compiler for .dsx data-space connector descriptions"};
  app.name("dsxc");
  app.require_subcommand(1);

  CliConfig config;
  std::string report = "text";
  std::string targets;  // comma-separated
  std::string out_dir;

  auto* check = app.add_subcommand("check", "Parse and validate models");
  check->add_option("inputs", config.input_paths, "Files, directories or globs")
      ->required();
  check->add_option("--report", report, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--fail-on-warning", config.fail_on_warning,
                  "Exit 1 on warnings too");

  auto* gen = app.add_subcommand("gen", "Generate connector configuration");
  gen->add_option("inputs", config.input_paths, "Files, directories or globs")
      ->required();
  gen->add_option("--out", out_dir, "Output directory")->required();
  gen->add_option("--targets", targets,
                  "Comma-separated list of edc, opcua, idlink-aas")
      ->required();
  gen->add_flag("--fail-on-warning", config.fail_on_warning,
                "Exit 1 on warnings too");

  auto* fmt = app.add_subcommand("fmt", "Rewrite models in canonical form");
  fmt->add_option("inputs", config.input_paths, "Files, directories or globs")
      ->required();
  fmt->add_flag("--check", config.check_only,
                "Only report files that are not canonical");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  config.report_format =
      report == "json" ? ReportFormat::kJson : ReportFormat::kText;
  config.out_dir = out_dir;
  std::istringstream target_list(targets);
  for (std::string name; std::getline(target_list, name, ',');) {
    auto target = ParseTarget(name);
    if (!target) {
      err << "dsxc: unknown target '" << name
          << "' (expected edc, opcua or idlink-aas)\n";
      return kExitUsage;
    }
    config.targets.insert(*target);
  }

  if (check->parsed()) return CmdCheck(config, out, err);
  if (gen->parsed()) return CmdGen(config, out, err);
  return CmdFmt(config, out, err);
}

}  // namespace dsx::cli

// syllasplit/cli.cc

// Copyright 2026  The syllasplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "syllasplit/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "syllasplit/error.h"
#include "syllasplit/eval.h"
#include "log.h"
#include "syllasplit/pipeline.h"

namespace syllasplit {

namespace {

struct ConfigFlags {
  PipelineConfig config;
  double vocoder_ms = 22.0;
  bool no_trim = false;

  PipelineConfig resolve() const {
    PipelineConfig c = config;
    c.vocoder_window_s = vocoder_ms / 1000.0;
    c.trim = !no_trim;
    return c;
  }
};

void add_config_options(CLI::App& app, ConfigFlags& flags) {
  PipelineConfig& c = flags.config;
  app.add_option("--perc", c.perc, "Threshold as a multiple of the RMS")
      ->capture_default_str();
  app.add_option("--epsilon", c.epsilon,
                 "Threshold multiplier per supersyllable split level")
      ->capture_default_str();
  app.add_option("--window", c.analysis_window,
                 "Analysis block length in samples")
      ->capture_default_str();
  app.add_option("--vocoder-ms", flags.vocoder_ms,
                 "Envelope discharge time in milliseconds")
      ->capture_default_str();
  app.add_option("--min-run-factor", c.min_run_factor,
                 "Shortest kept voiced run, in discharge lengths")
      ->capture_default_str();
  app.add_option("--super-limit", c.supersyllable_limit,
                 "Supersyllable length in samples at 44.1 kHz")
      ->capture_default_str();
  app.add_option("--max-depth", c.max_depth, "Supersyllable split levels")
      ->capture_default_str();
  app.add_flag("--no-trim", flags.no_trim,
               "Keep leading and trailing silence");
  app.add_option("--silence-threshold", c.silence_threshold,
                 "Trim level as a fraction of the peak")
      ->capture_default_str();
}

// Writes to the --out file, or to `out` when no path is given.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw IoError(fmt::format("{}: cannot open for writing", path));
  file << text;
  if (!file) throw IoError(fmt::format("{}: write failed", path));
}

std::ofstream open_dump(const std::string& path) {
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw IoError(fmt::format("{}: cannot open for writing", path));
  return file;
}

struct SegmentOptions {
  std::vector<std::string> inputs;
  std::string out;
  std::string format = "json";
  std::string export_dir;
  std::string dump_envelope;
  std::string dump_runs;
  int jobs = 1;
};

int run_segment(const SegmentOptions& opt, const PipelineConfig& config,
                std::ostream& out, std::ostream& err) {
  const std::size_t n = opt.inputs.size();
  std::vector<std::optional<SegmentationResult>> results(n);
  std::vector<std::string> errors(n);

  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(opt.jobs, 1))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::string& input = opt.inputs[i];
    try {
      Analysis a = analyze(load_wav(input), config, input);
      if (!opt.export_dir.empty())
        export_snippets(a, opt.export_dir,
                        std::filesystem::path(input).stem().string());
      if (!opt.dump_envelope.empty()) {
        std::ofstream file = open_dump(opt.dump_envelope);
        if (a.envelope.size() > 0)
          write_envelope_csv(file, a.rectified, a.envelope);
        else
          file << "index,rectified,envelope\n";
      }
      if (!opt.dump_runs.empty()) {
        std::ofstream file = open_dump(opt.dump_runs);
        write_runs(file, a.runs);
      }
      results[i] = std::move(a.result);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  const bool batch = n > 1;
  std::ostringstream text;
  if (opt.format == "csv") {
    write_csv_header(text, batch);
    for (const auto& r : results)
      if (r) write_csv_rows(text, *r, batch);
  } else {
    nlohmann::ordered_json doc;
    if (batch) {
      doc = nlohmann::ordered_json::array();
      for (const auto& r : results)
        if (r) doc.push_back(to_json(*r));
    } else if (results[0]) {
      doc = to_json(*results[0]);
    }
    if (!doc.is_null()) text << doc.dump(2) << '\n';
  }

  int status = kExitOk;
  for (const std::string& e : errors) {
    if (e.empty()) continue;
    err << "syllasplit: " << e << '\n';
    status = kExitIo;
  }
  if (status == kExitOk || batch) emit(text.str(), opt.out, out);
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Split recorded speech into syllables", "syllasplit"};
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  SegmentOptions seg;
  ConfigFlags seg_flags;
  app.add_option("--input", seg.inputs,
                 "WAV file to segment (repeat for batch mode)");
  app.add_option("--out", seg.out, "Write the result here instead of stdout");
  app.add_option("--format", seg.format, "Result format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--export-dir", seg.export_dir,
                 "Write one WAV snippet per syllable into this directory");
  app.add_option("--dump-envelope", seg.dump_envelope,
                 "Write index,rectified,envelope CSV (single input only)");
  app.add_option("--dump-runs", seg.dump_runs,
                 "Write the run-length table (single input only)");
  app.add_option("--jobs", seg.jobs, "Files processed in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_config_options(app, seg_flags);

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Score segmentation against a manifest");
  std::string manifest, eval_out, eval_format = "json";
  int eval_jobs = 1;
  ConfigFlags eval_flags;
  eval_cmd->add_option("--manifest", manifest, "JSON manifest of references")
      ->required();
  eval_cmd->add_option("--out", eval_out, "Write the report here");
  eval_cmd->add_option("--format", eval_format, "Report format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  eval_cmd->add_option("--jobs", eval_jobs, "Files processed in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_config_options(*eval_cmd, eval_flags);

  auto usage = [&](const std::string& message) {
    err << "syllasplit: " << message << "\n\n" << app.help();
    return kExitUsage;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    if (eval_cmd->parsed()) {
      const PipelineConfig config = eval_flags.resolve();
      try {
        config.validate();
      } catch (const std::invalid_argument& e) {
        return usage(e.what());
      }
      const EvalReport report = evaluate_corpus(manifest, config, eval_jobs);
      std::ostringstream text;
      if (eval_format == "table")
        write_table(text, report);
      else
        text << to_json(report).dump(2) << '\n';
      emit(text.str(), eval_out, out);
      return kExitOk;
    }

    if (seg.inputs.empty()) return usage("--input is required");
    if (seg.inputs.size() > 1 &&
        (!seg.dump_envelope.empty() || !seg.dump_runs.empty()))
      return usage("--dump-envelope and --dump-runs take a single --input");
    const PipelineConfig config = seg_flags.resolve();
    try {
      config.validate();
    } catch (const std::invalid_argument& e) {
      return usage(e.what());
    }
    return run_segment(seg, config, out, err);
  } catch (const std::exception& e) {
    err << "syllasplit: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace syllasplit

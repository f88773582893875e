// Copyright 2026 The cryptext Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cryptext/cli.hpp"

#include <signal.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cryptext/analytics.hpp"
#include "cryptext/error.hpp"
#include "cryptext/index.hpp"
#include "cryptext/normalize.hpp"
#include "cryptext/perturb.hpp"
#include "cryptext/query.hpp"
#include "cryptext/serialize.hpp"
#include "cryptext/service.hpp"
#include "io_util.hpp"

namespace cryptext::cli {
namespace {

using wire::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "tsv";
  std::string encoder_path;

  bool json() const { return format == "json"; }
  EncoderConfig encoder() const {
    return encoder_path.empty() ? EncoderConfig::standard()
                                : EncoderConfig::load(encoder_path);
  }
};

void add_common(CLI::App* sub, Common& c, bool with_format = true) {
  if (with_format) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
  }
  sub->add_option("--encoder", c.encoder_path, "Encoder config file (default: standard)");
}

std::set<int> parse_levels(const std::string& text) {
  std::set<int> levels;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(part, &used);
      if (used != part.size() || k < 0) throw std::invalid_argument(part);
      levels.insert(k);
    } catch (const std::exception&) {
      throw UsageError("--levels expects comma-separated non-negative integers, got '" +
                       text + "'");
    }
  }
  if (levels.empty()) throw UsageError("--levels must name at least one level");
  return levels;
}

std::vector<std::string> read_lines(std::istream& stream) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

// --text wins; otherwise --in (a path or "-") is read one text per line.
std::vector<std::string> input_texts(const std::optional<std::string>& text,
                                     const std::string& in_path, std::istream& in) {
  if (text) return {*text};
  if (in_path.empty()) throw UsageError("give --text or --in");
  if (in_path == "-") return read_lines(in);
  std::ifstream file(in_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + in_path);
  return read_lines(file);
}

Corpus read_inputs(const std::vector<std::string>& paths, const std::string& format,
                   std::istream& in) {
  const auto fmt = parse_corpus_format(format);
  if (!fmt) throw UsageError("--input-format must be auto, plain or records");
  Corpus all;
  for (const std::string& p : paths) {
    Corpus c = p == "-" ? read_corpus(in, *fmt, "stdin") : read_corpus_file(p, *fmt);
    all.documents.insert(all.documents.end(), std::make_move_iterator(c.documents.begin()),
                         std::make_move_iterator(c.documents.end()));
    all.report.absorb(c.report);
  }
  return all;
}

void report_malformed(const CorpusReport& report, std::ostream& err) {
  if (report.malformed == 0) return;
  err << "warning: skipped " << report.malformed << " malformed line(s)";
  if (!report.samples.empty()) {
    const MalformedLine& m = report.samples.front();
    err << ", first at " << m.source << ":" << m.line << " (" << m.reason << ")";
  }
  err << "\n";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, const Common& c,
                           std::ostream& err) {
  if (seed) return *seed;
  if (c.json()) throw UsageError("--seed is required with --format json");
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed: " << s << "\n";
  return s;
}

// Summaries print as "dotted.key<TAB>value" lines in TSV mode.
void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_string()) {
    out << prefix << '\t' << j.get<std::string>() << '\n';
  } else {
    out << prefix << '\t' << wire::dump(j) << '\n';
  }
}

void emit_summary(const Json& j, const Common& c, std::ostream& out) {
  if (c.json()) {
    out << wire::dump(j) << '\n';
  } else {
    flatten(j, "", out);
  }
}

PhoneticIndex load_level(const std::string& dir, int k, const EncoderConfig& encoder) {
  if (dir.empty()) throw UsageError("--index is required");
  return load(index_file_name(dir, k), encoder);
}

// ---------------------------------------------------------------- build-index

struct BuildIndexArgs {
  Common common;
  std::vector<std::string> corpus;
  std::string levels = "0,1,2";
  std::string out_dir;
  std::string input_format = "auto";
  bool merge_existing = false;
  std::string watch_dir;
  double interval_s = 5.0;
  int polls = 0;
  std::size_t max_token_length = 64;
};

Json levels_json(const std::map<int, PhoneticIndex>& indexes) {
  Json levels = Json::object();
  for (const auto& [k, index] : indexes) levels[std::to_string(k)] = wire::to_json(index.stats());
  return levels;
}

int build_index(const BuildIndexArgs& a, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const EncoderConfig encoder = a.common.encoder();
  const std::set<int> levels = parse_levels(a.levels);
  IngestOptions options;
  options.max_level = std::max(options.max_level, *levels.rbegin());
  options.max_token_length = a.max_token_length;

  if (!a.watch_dir.empty()) {
    FolderIngestor ingestor(a.watch_dir, a.out_dir, levels, encoder, options);
    for (int poll = 0; a.polls == 0 || poll < a.polls; ++poll) {
      if (poll > 0) {
        std::this_thread::sleep_for(std::chrono::duration<double>(a.interval_s));
      }
      const auto r = ingestor.poll();
      report_malformed(r.corpus, err);
      if (r.new_files > 0 || a.polls != 0) {
        Json j = {{"new_files", r.new_files}, {"report", wire::to_json(r.report)}};
        emit_summary(j, a.common, out);
        out.flush();
      }
    }
    return kExitOk;
  }

  if (a.corpus.empty()) throw UsageError("give --corpus or --watch");
  Corpus corpus = read_inputs(a.corpus, a.input_format, in);
  report_malformed(corpus.report, err);
  IngestResult result = ingest(corpus.documents, levels, encoder, options);
  if (a.merge_existing) {
    for (auto& [k, index] : result.indexes) {
      const auto path = index_file_name(a.out_dir, k);
      if (std::filesystem::exists(path)) index = merge(load(path, encoder), index);
    }
  }
  save_directory(result.indexes, a.out_dir);
  Json j = {{"report", wire::to_json(result.report)},
            {"malformed_lines", corpus.report.malformed},
            {"levels", levels_json(result.indexes)}};
  emit_summary(j, a.common, out);
  return kExitOk;
}

// --------------------------------------------------------------------- lookup

struct LookupArgs {
  Common common;
  std::string token;
  std::string index_dir;
  int k = 1;
  std::size_t d = 3;
  bool case_sensitive = false;
  std::uint64_t min_count = 1;
};

int lookup_cmd(const LookupArgs& a, std::ostream& out) {
  const PhoneticIndex index = load_level(a.index_dir, a.k, a.common.encoder());
  LookupParams lp;
  lp.k = a.k;
  lp.d = a.d;
  lp.case_sensitive = a.case_sensitive;
  lp.min_count = a.min_count;
  const PerturbationSet set = lookup(index, a.token, lp);
  if (a.common.json()) {
    out << wire::dump(wire::to_json(set)) << '\n';
  } else {
    for (const Member& m : set.members) {
      out << m.raw << '\t' << m.count << '\t' << m.distance << '\n';
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------ normalize

struct NormalizeArgs {
  Common common;
  std::optional<std::string> text;
  std::string in_path;
  std::string dict_path;
  std::string model_path;
  std::string scorer_command;
  int k = 1;
  std::size_t d = 3;
  std::size_t top_n = 5;
};

int normalize_cmd(const NormalizeArgs& a, std::istream& in, std::ostream& out) {
  const EncoderConfig encoder = a.common.encoder();
  const std::vector<std::string> texts = input_texts(a.text, a.in_path, in);
  const WordDictionary dict = WordDictionary::load(a.dict_path, {a.k}, encoder);
  std::unique_ptr<CoherencyScorer> scorer;
  if (!a.scorer_command.empty()) {
    scorer = std::make_unique<ExternalProcessScorer>(a.scorer_command);
  } else if (!a.model_path.empty()) {
    scorer = std::make_unique<NGramModel>(NGramModel::load(a.model_path));
  } else {
    scorer = std::make_unique<UniformScorer>();
  }
  NormalizeParams np;
  np.k = a.k;
  np.d = a.d;
  np.top_n = a.top_n;
  for (const std::string& text : texts) {
    const NormalizationResult r = normalize_text(text, dict, *scorer, np);
    if (a.common.json()) {
      out << wire::dump(wire::to_json(r)) << '\n';
    } else {
      out << r.output_text << '\n';
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------------- perturb

struct PerturbArgs {
  Common common;
  std::optional<std::string> text;
  std::string in_path;
  std::string index_dir;
  double ratio = 0.25;
  std::optional<std::uint64_t> seed;
  int k = 1;
  std::size_t d = 3;
  bool case_sensitive = false;
};

PerturbRequest make_request(double ratio, std::uint64_t seed, int k, std::size_t d,
                            bool case_sensitive) {
  PerturbRequest pr;
  pr.ratio = ratio;
  pr.seed = seed;
  pr.case_sensitive = case_sensitive;
  pr.lookup.k = k;
  pr.lookup.d = d;
  return pr;
}

int perturb_cmd(const PerturbArgs& a, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const std::uint64_t seed = resolve_seed(a.seed, a.common, err);
  const std::vector<std::string> texts = input_texts(a.text, a.in_path, in);
  const PhoneticIndex index = load_level(a.index_dir, a.k, a.common.encoder());
  PerturbRequest pr = make_request(a.ratio, seed, a.k, a.d, a.case_sensitive);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    // A single --text uses the seed as given, so the CLI and the service
    // agree; input lines get independent per-line streams.
    pr.seed = a.text ? seed : document_seed(seed, std::to_string(i + 1));
    const PerturbResult r = perturb_text(texts[i], index, pr);
    if (a.common.json()) {
      out << wire::dump(wire::to_json(r)) << '\n';
    } else {
      out << r.output_text << '\n';
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------- perturb-corpus

struct PerturbCorpusArgs {
  Common common;
  std::string in_path;
  std::string out_path;
  std::string manifest_path;
  std::string input_format = "auto";
  std::string index_dir;
  double ratio = 0.25;
  std::optional<std::uint64_t> seed;
  int k = 1;
  std::size_t d = 3;
  bool case_sensitive = false;
};

int perturb_corpus_cmd(const PerturbCorpusArgs& a, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  const std::uint64_t seed = resolve_seed(a.seed, a.common, err);
  Corpus corpus = read_inputs({a.in_path}, a.input_format, in);
  report_malformed(corpus.report, err);
  const PhoneticIndex index = load_level(a.index_dir, a.k, a.common.encoder());
  const CorpusPerturbation result = perturb_corpus(
      corpus.documents, index, make_request(a.ratio, seed, a.k, a.d, a.case_sensitive));

  std::string docs;
  for (const Document& d : result.documents) {
    Json j = {{"id", d.id}, {"text", d.text}};
    if (!d.source.empty()) j["source"] = d.source;
    if (d.timestamp) j["timestamp"] = format_rfc3339(*d.timestamp);
    docs += wire::dump(j) + '\n';
  }
  std::string manifest;
  for (const ManifestRow& row : result.manifest) manifest += wire::dump(wire::to_json(row)) + '\n';
  const std::string manifest_path =
      a.manifest_path.empty() ? a.out_path + ".manifest.jsonl" : a.manifest_path;
  detail::write_atomically(a.out_path, docs);
  detail::write_atomically(manifest_path, manifest);

  Json j = {{"documents", result.documents.size()},
            {"malformed", result.malformed + corpus.report.malformed},
            {"total_words", result.total_words},
            {"total_achieved", result.total_achieved},
            {"achieved_ratio", result.achieved_ratio()},
            {"seed", seed},
            {"rng", kGeneratorName},
            {"manifest", manifest_path}};
  emit_summary(j, a.common, out);
  return kExitOk;
}

// ------------------------------------------------------------------- timeline

struct TimelineArgs {
  Common common;
  std::string word;
  std::vector<std::string> corpus;
  std::string input_format = "auto";
  std::string index_dir;
  std::string from;
  std::string to;
  std::string granularity = "day";
  std::string lexicon_path;
  int k = 1;
  std::size_t d = 3;
  bool case_sensitive = false;
  bool no_split = false;
};

int timeline_cmd(const TimelineArgs& a, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  TimelineQuery q;
  q.word = a.word;
  q.lookup.k = a.k;
  q.lookup.d = a.d;
  q.lookup.case_sensitive = a.case_sensitive;
  q.split_variants = !a.no_split;
  const auto g = parse_granularity(a.granularity);
  if (!g) throw UsageError("--granularity must be day, week or month");
  q.granularity = *g;
  const auto parse_ts = [](const std::string& text, const char* flag) -> std::optional<Timestamp> {
    if (text.empty()) return std::nullopt;
    const auto ts = parse_rfc3339(text);
    if (!ts) {
      throw Error(ErrorCode::kUnparseableTimestamp,
                  std::string(flag) + " is not an RFC 3339 timestamp: " + text);
    }
    return ts;
  };
  q.from = parse_ts(a.from, "--from");
  q.to = parse_ts(a.to, "--to");

  const EncoderConfig encoder = a.common.encoder();
  Corpus corpus = read_inputs(a.corpus, a.input_format, in);
  report_malformed(corpus.report, err);
  // Without a prebuilt index the corpus itself supplies the variants.
  const PhoneticIndex index =
      a.index_dir.empty()
          ? std::move(ingest(corpus.documents, {a.k}, encoder).indexes.at(a.k))
          : load_level(a.index_dir, a.k, encoder);
  std::optional<SentimentLexicon> lexicon;
  if (!a.lexicon_path.empty()) lexicon = SentimentLexicon::load(a.lexicon_path);

  const TimelineSeries series =
      build_timeline(corpus.documents, index, q, lexicon ? &*lexicon : nullptr);
  for (const std::string& w : series.warnings) err << "warning: " << w << '\n';
  if (a.common.json()) {
    out << wire::dump(wire::to_json(series)) << '\n';
    return kExitOk;
  }
  for (const TimelineBucket& b : series.buckets) {
    out << format_rfc3339(b.start) << '\t' << b.document_total << '\t' << b.occurrences
        << '\t';
    if (b.mean_sentiment) out << *b.mean_sentiment;
    out << '\t';
    bool first = true;
    for (const auto& [variant, count] : b.variant_counts) {
      out << (first ? "" : ",") << variant << '=' << count;
      first = false;
    }
    out << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- train-lm

struct TrainLmArgs {
  Common common;
  std::vector<std::string> corpus;
  std::string input_format = "auto";
  int order = 3;
  double alpha = 0.1;
  std::string out_path;
};

int train_lm_cmd(const TrainLmArgs& a, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  Corpus corpus = read_inputs(a.corpus, a.input_format, in);
  report_malformed(corpus.report, err);
  const NGramModel model = train_ngram(corpus.documents, a.order, a.alpha, a.common.encoder());
  model.save(a.out_path);
  Json j = {{"order", model.order()},
            {"alpha", model.alpha()},
            {"documents", corpus.documents.size()},
            {"vocabulary", model.outcome_count() - 1},
            {"out", a.out_path}};
  emit_summary(j, a.common, out);
  return kExitOk;
}

// ---------------------------------------------------------------------- serve

struct ServeArgs {
  std::string config_path;
  std::optional<int> port;
  std::optional<std::string> bind;
};

int serve_cmd(const ServeArgs& a, std::ostream& err) {
  service::ApiConfig config = service::ApiConfig::load(a.config_path);
  if (a.port) config.port = *a.port;
  if (a.bind) config.bind = *a.bind;

  // Block the shutdown signals before any thread starts so that only the
  // sigwait below receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  service::Service svc(config);
  service::HttpServer server(svc);
  const int port = server.start(config.bind, config.port);
  err << "listening on http://" << config.bind << ":" << port
      << (config.auth_token ? " (auth enabled)" : " (open, no auth token)") << std::endl;
  int sig = 0;
  sigwait(&signals, &sig);
  err << "shutting down" << std::endl;
  server.stop();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Discover, apply and undo human-written text perturbations.", "cryptext"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  BuildIndexArgs bi;
  auto* build = app.add_subcommand("build-index", "Build phonetic indexes from corpus files");
  build->add_option("--corpus", bi.corpus, "Corpus files (plain text or JSONL; '-' for stdin)");
  build->add_option("--levels", bi.levels, "Comma-separated key levels")->capture_default_str();
  build->add_option("--out", bi.out_dir, "Output index directory")->required();
  build->add_option("--input-format", bi.input_format, "auto, plain or records")
      ->capture_default_str();
  build->add_flag("--merge", bi.merge_existing, "Merge into indexes already in --out");
  build->add_option("--watch", bi.watch_dir, "Poll this folder for new corpus files");
  build->add_option("--interval", bi.interval_s, "Watch poll interval in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build->add_option("--polls", bi.polls, "Stop watching after N polls (0: forever)")
      ->check(CLI::NonNegativeNumber);
  build->add_option("--max-token-length", bi.max_token_length,
                    "Longest admitted token, in code points")
      ->capture_default_str();
  add_common(build, bi.common);

  LookupArgs lk;
  auto* lookup_sub = app.add_subcommand("lookup", "List the perturbations of a token");
  lookup_sub->add_option("token", lk.token, "Query token")->required();
  lookup_sub->add_option("--index", lk.index_dir, "Index directory")->required();
  lookup_sub->add_option("--k", lk.k, "Key level")->check(CLI::Range(0, 16))->capture_default_str();
  lookup_sub->add_option("--d", lk.d, "Maximum edit distance")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  lookup_sub->add_flag("--case-sensitive", lk.case_sensitive, "Compare spellings exactly");
  lookup_sub->add_option("--min-count", lk.min_count, "Drop members seen fewer times")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(lookup_sub, lk.common);

  NormalizeArgs nm;
  auto* norm = app.add_subcommand("normalize", "Replace perturbed words by dictionary words");
  auto* nm_text = norm->add_option("--text", nm.text, "Text to normalize");
  norm->add_option("--in", nm.in_path, "File with one text per line ('-' for stdin)")
      ->excludes(nm_text);
  norm->add_option("--dict", nm.dict_path, "Word list, one word per line")->required();
  norm->add_option("--model", nm.model_path, "N-gram model from train-lm");
  norm->add_option("--scorer-command", nm.scorer_command,
                   "External coherency scorer process (overrides --model)");
  norm->add_option("--k", nm.k, "Key level")->check(CLI::Range(0, 16))->capture_default_str();
  norm->add_option("--d", nm.d, "Maximum edit distance")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  norm->add_option("--top-n", nm.top_n, "Candidates reported per token")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
  add_common(norm, nm.common);

  PerturbArgs pt;
  auto* pert = app.add_subcommand("perturb", "Perturb a fraction of the words of a text");
  auto* pt_text = pert->add_option("--text", pt.text, "Text to perturb");
  pert->add_option("--in", pt.in_path, "File with one text per line ('-' for stdin)")
      ->excludes(pt_text);
  pert->add_option("--index", pt.index_dir, "Index directory")->required();
  pert->add_option("--ratio", pt.ratio, "Fraction of words to perturb")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  pert->add_option("--seed", pt.seed, "RNG seed (required with --format json)");
  pert->add_option("--k", pt.k, "Key level")->check(CLI::Range(0, 16))->capture_default_str();
  pert->add_option("--d", pt.d, "Maximum edit distance")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  pert->add_flag("--case-sensitive", pt.case_sensitive, "Keep case-only variants");
  add_common(pert, pt.common);

  PerturbCorpusArgs pc;
  auto* pcorp = app.add_subcommand("perturb-corpus",
                                   "Perturb every document of a corpus with a manifest");
  pcorp->add_option("--in", pc.in_path, "Corpus file ('-' for stdin)")->required();
  pcorp->add_option("--out", pc.out_path, "Perturbed corpus (JSONL)")->required();
  pcorp->add_option("--manifest", pc.manifest_path,
                    "Manifest path (default: <out>.manifest.jsonl)");
  pcorp->add_option("--input-format", pc.input_format, "auto, plain or records")
      ->capture_default_str();
  pcorp->add_option("--index", pc.index_dir, "Index directory")->required();
  pcorp->add_option("--ratio", pc.ratio, "Fraction of words to perturb")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  pcorp->add_option("--seed", pc.seed, "RNG seed (required with --format json)");
  pcorp->add_option("--k", pc.k, "Key level")->check(CLI::Range(0, 16))->capture_default_str();
  pcorp->add_option("--d", pc.d, "Maximum edit distance")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  pcorp->add_flag("--case-sensitive", pc.case_sensitive, "Keep case-only variants");
  add_common(pcorp, pc.common);

  TimelineArgs tl;
  auto* tline = app.add_subcommand("timeline", "Bucket a word's variants over time");
  tline->add_option("--word", tl.word, "Query word")->required();
  tline->add_option("--corpus", tl.corpus, "Timestamped corpus files")->required();
  tline->add_option("--input-format", tl.input_format, "auto, plain or records")
      ->capture_default_str();
  tline->add_option("--index", tl.index_dir, "Index directory (default: built from --corpus)");
  tline->add_option("--from", tl.from, "Inclusive start (RFC 3339 or YYYY-MM-DD)");
  tline->add_option("--to", tl.to, "Exclusive end (RFC 3339 or YYYY-MM-DD)");
  tline->add_option("--granularity", tl.granularity, "day, week or month")
      ->check(CLI::IsMember({"day", "week", "month"}))
      ->capture_default_str();
  tline->add_option("--lexicon", tl.lexicon_path, "Sentiment lexicon (word TAB valence)");
  tline->add_option("--k", tl.k, "Key level")->check(CLI::Range(0, 16))->capture_default_str();
  tline->add_option("--d", tl.d, "Maximum edit distance")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  tline->add_flag("--case-sensitive", tl.case_sensitive, "Compare spellings exactly");
  tline->add_flag("--no-split", tl.no_split, "Omit per-variant counts");
  add_common(tline, tl.common);

  TrainLmArgs lm;
  auto* train = app.add_subcommand("train-lm", "Train the n-gram coherency model");
  train->add_option("--corpus", lm.corpus, "Corpus files")->required();
  train->add_option("--input-format", lm.input_format, "auto, plain or records")
      ->capture_default_str();
  train->add_option("--order", lm.order, "N-gram order")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  train->add_option("--alpha", lm.alpha, "Additive smoothing constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--out", lm.out_path, "Model file")->required();
  add_common(train, lm.common);

  ServeArgs sv;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--config", sv.config_path, "key=value service config")->required();
  serve->add_option("--port", sv.port, "Override the configured port")->check(CLI::Range(0, 65535));
  serve->add_option("--bind", sv.bind, "Override the configured bind address");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  CLI::App* active = &app;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (CLI::App* sub : app.get_subcommands()) active = sub;
    if (*build) return build_index(bi, in, out, err);
    if (*lookup_sub) return lookup_cmd(lk, out);
    if (*norm) return normalize_cmd(nm, in, out);
    if (*pert) return perturb_cmd(pt, in, out, err);
    if (*pcorp) return perturb_corpus_cmd(pc, in, out, err);
    if (*tline) return timeline_cmd(tl, in, out, err);
    if (*train) return train_lm_cmd(lm, in, out, err);
    if (*serve) return serve_cmd(sv, err);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    for (CLI::App* sub : app.get_subcommands()) active = sub;
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace cryptext::cli

// Copyright 2026 The Curator Authors.
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

#include "curator/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "curator/corpus_io.hpp"
#include "curator/embeddings.hpp"
#include "curator/ensemble.hpp"
#include "curator/error.hpp"
#include "curator/mask.hpp"
#include "curator/metrics.hpp"
#include "curator/preprocess.hpp"
#include "curator/segment.hpp"
#include "curator/semisup.hpp"
#include "curator/ted.hpp"

namespace curator::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Reads flags from a JSON object. Nested objects address subcommands:
// {"threads": 4, "ted": {"select": {"k": 1300}}}.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool, bool, std::string) const override {
    return resolved(app).dump();
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      input >> j;
    } catch (const json::exception& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

  static json resolved(const CLI::App* app) {
    json j = json::object();
    for (const CLI::Option* opt : app->get_options()) {
      std::string name = opt->get_single_name();
      if (name.empty() || name == "help" || name == "config" || name == "version") continue;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        j[name] = res.size() == 1 ? json(res.front()) : json(res);
      } else if (!opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    for (const CLI::App* sub : app->get_subcommands()) j[sub->get_name()] = resolved(sub);
    return j;
  }

 private:
  static void flatten(const json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object()) {
        auto nested = parents;
        nested.push_back(it.key());
        flatten(*it, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = it.key();
      if (it->is_array()) {
        for (const auto& v : *it) item.inputs.push_back(scalar(v, it.key()));
      } else {
        item.inputs.push_back(scalar(*it, it.key()));
      }
      items.push_back(std::move(item));
    }
  }

  static std::string scalar(const json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("config value for '" + key + "' must be a scalar or array of scalars");
  }
};

void write_json(const json& j, const fs::path& path) {
  auto out = open_output(path);
  *out << j.dump(2) << '\n';
  out->flush();
  if (!*out) throw IoError("write failed: " + path.string());
}

json report_json(const ClassReport& r) {
  json classes = json::object();
  for (const auto& c : r.classes) {
    classes[std::string(label_name(c.label))] = {
        {"precision", c.precision},
        {"recall", c.recall},
        {"f1", c.f1},
        {"support", c.support},
        {"predicted", c.predicted},
        {"true_positive", c.true_positive},
        {"false_positive", c.false_positive},
        {"false_negative", c.false_negative},
        {"precision_undefined", c.precision_undefined},
        {"recall_undefined", c.recall_undefined},
    };
  }
  return {{"macro_f1", r.macro_f1}, {"total", r.total}, {"correct", r.correct}, {"classes", classes}};
}

std::vector<ThresholdConfig> load_grid(const fs::path& path) {
  auto in = open_input(path);
  json j;
  try {
    *in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": invalid JSON: " + e.what());
  }
  if (j.is_object() && j.contains("grid")) j = j["grid"];
  if (!j.is_array()) throw FormatError(path.string() + ": expected an array of threshold objects");
  std::vector<ThresholdConfig> grid;
  for (const auto& e : j) {
    try {
      grid.push_back({e.at("t_off").get<double>(), e.at("t_not").get<double>(),
                      e.at("t_std").get<double>()});
    } catch (const json::exception& ex) {
      throw FormatError(path.string() + ": bad grid entry " + e.dump() + ": " + ex.what());
    }
  }
  return grid;
}

std::map<std::string, double> load_model_scores(const fs::path& path) {
  auto in = open_input(path);
  json j;
  try {
    *in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw FormatError(path.string() + ": expected {\"model\": score, ...}");
  std::map<std::string, double> scores;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it->is_number()) throw FormatError(path.string() + ": score of '" + it.key() + "' is not a number");
    scores[it.key()] = it->get<double>();
  }
  return scores;
}

EmbeddingFile load_sentence_embeddings(const fs::path& path, std::size_t threads) {
  EmbeddingFile f = read_embeddings(path);
  if (f.kind == EmbeddingKind::kToken) return mean_pool(f, threads);
  return f;
}

struct Options {
  std::size_t threads = 1;
  std::uint64_t seed = 42;
  std::string log_path;

  struct {
    std::string in, out, stats, steps = "url,emoji,hashtag,casing,punct", lang;
    std::size_t max_punct = 3;
    std::string emoji_table = std::string(CURATOR_DATA_DIR) + "/emoji.tsv";
    std::string unigrams = std::string(CURATOR_DATA_DIR) + "/unigrams.tsv";
  } pre;

  struct {
    std::string in, out, grid, out_dir, summary;
    bool default_grid = false;
    double t_off = 0.8, t_not = 0.2, t_std = 0.125;
  } semi;

  struct {
    std::string src, tgt, out;
  } score;

  struct {
    std::string in, scores, out, mode = "top", lang;
    std::size_t k = 1300;
  } select;

  struct {
    std::string scores_dir, out;
  } rank;

  struct {
    std::string base, extra, out, ns;
  } merge;

  struct {
    std::vector<std::string> preds;
    std::string out;
  } ensemble;

  struct {
    std::string scores;
    std::size_t k = 3;
  } models;

  struct {
    std::string in, wordlist, out, pad = "[PAD]";
    double p = 0.5;
  } mask;

  struct {
    std::string gold, pred, out;
  } eval;

  struct {
    std::string in, out;
  } emb;
};

void run_preprocess(const Options& o, std::ostream&) {
  PreprocessConfig cfg;
  cfg.steps = parse_method_list(o.pre.steps);
  cfg.max_consecutive_punct = o.pre.max_punct;
  cfg.validate();
  std::optional<EmojiTable> emoji;
  std::optional<SegmentationModel> model;
  if (cfg.enabled(Method::kEmoji)) emoji = EmojiTable::load(o.pre.emoji_table);
  if (cfg.enabled(Method::kHashtag)) model = SegmentationModel::load(o.pre.unigrams);
  Preprocessor pre(cfg, emoji ? &*emoji : nullptr, model ? &*model : nullptr);

  Dataset ds = read_olid_tsv(o.pre.in, o.pre.lang);
  PipelineResult result = pre.run(ds, o.threads);
  write_dataset_tsv(result.dataset, o.pre.out);
  if (!o.pre.stats.empty()) {
    json modified = json::object();
    for (Method m : kAllMethods) modified[std::string(method_name(m))] = result.stats[m];
    json steps = json::array();
    for (Method m : kAllMethods) {
      if (cfg.enabled(m)) steps.push_back(std::string(method_name(m)));
    }
    write_json({{"records", result.stats.records}, {"steps", steps}, {"modified", modified}}, o.pre.stats);
  }
}

void run_filter_semi(const Options& o, std::ostream& out) {
  SemiSupReader reader(o.semi.in);
  if (!o.semi.grid.empty() || o.semi.default_grid) {
    if (o.semi.out_dir.empty()) throw ValidationError("--grid requires --out-dir");
    auto grid = o.semi.default_grid ? default_threshold_grid() : load_grid(o.semi.grid);
    auto results = grid_filter_to_files(reader, grid, o.semi.out_dir);
    json summary = json::array();
    for (const auto& r : results) {
      summary.push_back({{"t_off", r.config.t_off},
                         {"t_not", r.config.t_not},
                         {"t_std", r.config.t_std},
                         {"selected", r.selected},
                         {"path", r.path.string()}});
    }
    if (!o.semi.summary.empty()) write_json(summary, o.semi.summary);
    out << summary.dump(2) << '\n';
    return;
  }
  if (o.semi.out.empty()) throw ValidationError("filter-semi needs --out (or --grid with --out-dir)");
  ThresholdConfig cfg{o.semi.t_off, o.semi.t_not, o.semi.t_std};
  Dataset selected = filter_semi(reader, cfg);
  write_dataset_tsv(selected, o.semi.out);
  json summary = {{"t_off", cfg.t_off}, {"t_not", cfg.t_not}, {"t_std", cfg.t_std},
                  {"selected", selected.size()}, {"path", o.semi.out}};
  if (!o.semi.summary.empty()) write_json(summary, o.semi.summary);
  out << summary.dump(2) << '\n';
}

void run_ted_score(const Options& o, std::ostream&) {
  auto src = load_sentence_embeddings(o.score.src, o.threads);
  auto tgt = load_sentence_embeddings(o.score.tgt, o.threads);
  write_scores_tsv(ted_scores(src, tgt, o.threads), o.score.out);
}

void run_ted_select(const Options& o, std::ostream&) {
  auto mode = parse_selection_mode(o.select.mode);
  if (!mode) throw ValidationError("unknown selection mode '" + o.select.mode + "'");
  Dataset ds = read_olid_tsv(o.select.in, o.select.lang);
  auto scores = read_scores_tsv(o.select.scores);
  Dataset selected = select_instances(ds, scores, o.select.k, *mode, o.seed);
  write_dataset_tsv(selected, o.select.out);
}

void run_ted_rank(const Options& o, std::ostream& out) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.rank.scores_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tsv") files.push_back(entry.path());
  }
  if (files.empty()) throw ValidationError("no *.tsv score files in " + o.rank.scores_dir);
  std::sort(files.begin(), files.end());
  std::vector<LanguageTed> langs;
  for (const auto& f : files) langs.push_back(ted_language(f.stem().string(), read_scores_tsv(f)));
  std::ostringstream table;
  table << "language\tmean_distance\tn\n";
  char buf[32];
  for (const auto& l : rank_languages(langs)) {
    std::snprintf(buf, sizeof(buf), "%.9g", l.mean_distance);
    table << l.language << '\t' << buf << '\t' << l.n << '\n';
  }
  if (o.rank.out.empty()) {
    out << table.str();
  } else {
    auto f = open_output(o.rank.out);
    *f << table.str();
  }
}

void run_merge(const Options& o, std::ostream&) {
  Dataset base = read_olid_tsv(o.merge.base);
  Dataset extra = read_olid_tsv(o.merge.extra);
  Dataset merged = o.merge.ns.empty() ? merge_augmented(base, extra)
                                      : build_transfer_set(base, namespace_ids(extra, o.merge.ns));
  write_dataset_tsv(merged, o.merge.out);
}

void run_ensemble(const Options& o, std::ostream&) {
  std::vector<PredictionSet> sets;
  for (const auto& p : o.ensemble.preds) sets.push_back(read_predictions_tsv(p));
  write_predictions_tsv(majority_vote(sets), o.ensemble.out);
}

void run_select_models(const Options& o, std::ostream& out) {
  auto chosen = select_top_models(load_model_scores(o.models.scores), o.models.k);
  out << json(chosen).dump() << '\n';
}

void run_mask(const Options& o, std::ostream&) {
  WordList list = WordList::load(o.mask.wordlist);
  Dataset ds = read_olid_tsv(o.mask.in);
  Dataset masked = mask_dataset(ds, list, {o.mask.p, o.seed, o.mask.pad}, o.threads);
  write_dataset_tsv(masked, o.mask.out);
}

void run_evaluate(const Options& o, std::ostream& out) {
  const LabelMap gold = read_label_map(o.eval.gold);
  const LabelMap pred = read_label_map(o.eval.pred);
  auto report = report_json(class_report(gold, pred));
  if (!o.eval.out.empty()) write_json(report, o.eval.out);
  out << report.dump(2) << '\n';
}

void run_embeddings_validate(const Options& o, std::ostream& out) {
  auto s = validate_embeddings(o.emb.in);
  out << json{{"kind", s.kind == EmbeddingKind::kSentence ? "sentence" : "token"},
              {"dim", s.dim},
              {"count", s.count},
              {"rows", s.total_rows}}
             .dump()
      << '\n';
}

void run_embeddings_pool(const Options& o, std::ostream&) {
  EmbeddingFile f = read_embeddings(o.emb.in);
  write_embeddings(mean_pool(f, o.threads), o.emb.out);
}

void append_log(const std::string& path, const CLI::App& app, const std::vector<std::string>& args,
                int status, const std::string& error) {
  json entry = {{"program", "curator"},
                {"version", CURATOR_VERSION},
                {"args", args},
                {"config", JsonConfig::resolved(&app)},
                {"exit_code", status}};
  if (!error.empty()) entry["error"] = error;
  std::ofstream log(path, std::ios::app);
  log << entry.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Data curation toolkit for multilingual offensive-language corpora", "curator"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file supplying any flag (command line wins)");
  app.set_version_flag("--version", std::string("curator ") + CURATOR_VERSION);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Data-parallel width")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--log", o.log_path, "Append a JSON log line (version, resolved config)");

  auto* pre = app.add_subcommand("preprocess", "Normalize tweets and count modified examples");
  pre->add_option("--in", o.pre.in, "Input OLID TSV")->required();
  pre->add_option("--out", o.pre.out, "Output TSV")->required();
  pre->add_option("--stats", o.pre.stats, "Write per-method counts as JSON");
  pre->add_option("--steps", o.pre.steps, "Comma-separated subset of url,emoji,hashtag,casing,punct")
      ->capture_default_str();
  pre->add_option("--max-punct", o.pre.max_punct, "Longest kept run of one punctuation mark")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  pre->add_option("--emoji-table", o.pre.emoji_table, "Emoji description table")->capture_default_str();
  pre->add_option("--unigrams", o.pre.unigrams, "Word frequency table for hashtags")->capture_default_str();
  pre->add_option("--lang", o.pre.lang, "Language code stamped on records");

  auto* semi = app.add_subcommand("filter-semi", "Threshold semi-supervised scores into hard labels");
  semi->add_option("--in", o.semi.in, "Semi-supervised TSV (id, text, avg, std)")->required();
  semi->add_option("--out", o.semi.out, "Output TSV for a single config");
  semi->add_option("--t-off", o.semi.t_off)->capture_default_str();
  semi->add_option("--t-not", o.semi.t_not)->capture_default_str();
  semi->add_option("--t-std", o.semi.t_std)->capture_default_str();
  semi->add_option("--grid", o.semi.grid, "JSON list of {t_off, t_not, t_std}");
  semi->add_flag("--default-grid", o.semi.default_grid, "Use the 8-config grid {0.8,0.9}x{0.2,0.3}x{0.1,0.125}");
  semi->add_option("--out-dir", o.semi.out_dir, "Output directory for --grid");
  semi->add_option("--summary", o.semi.summary, "Write the selection summary as JSON");

  auto* ted = app.add_subcommand("ted", "Translation embedding distance scoring and selection");
  ted->require_subcommand(1);
  auto* score = ted->add_subcommand("score", "Per-instance distances between source and translation");
  score->add_option("--src", o.score.src, "CEMB of original sentences")->required();
  score->add_option("--tgt", o.score.tgt, "CEMB of translations")->required();
  score->add_option("--out", o.score.out, "Scores TSV")->required();
  auto* select = ted->add_subcommand("select", "Pick k transfer instances by distance");
  select->add_option("--in", o.select.in, "Transfer-language TSV")->required();
  select->add_option("--scores", o.select.scores, "Scores TSV")->required();
  select->add_option("--out", o.select.out, "Output TSV")->required();
  select->add_option("--mode", o.select.mode)->capture_default_str()->check(CLI::IsMember({"top", "bottom", "random"}));
  select->add_option("--k", o.select.k)->capture_default_str();
  select->add_option("--lang", o.select.lang, "Language code stamped on records");
  auto* rank = ted->add_subcommand("rank", "Rank transfer languages by mean distance");
  rank->add_option("--scores-dir", o.rank.scores_dir, "Directory of <lang>.tsv score files")->required();
  rank->add_option("--out", o.rank.out, "Output TSV (default stdout)");

  auto* merge = app.add_subcommand("merge", "Append extra records to a base dataset");
  merge->add_option("--base", o.merge.base)->required();
  merge->add_option("--extra", o.merge.extra)->required();
  merge->add_option("--out", o.merge.out)->required();
  merge->add_option("--namespace", o.merge.ns, "Prefix extra ids with '<lang>:'");

  auto* ens = app.add_subcommand("ensemble", "Majority vote over prediction files");
  ens->add_option("--pred", o.ensemble.preds, "Prediction TSVs")->required()->expected(1, -1);
  ens->add_option("--out", o.ensemble.out)->required();

  auto* models = app.add_subcommand("select-models", "Top-k models by validation score");
  models->add_option("--scores", o.models.scores, "JSON {model: score}")->required();
  models->add_option("--k", o.models.k)->capture_default_str();

  auto* mask = app.add_subcommand("mask", "Randomly replace listed offensive words (training only)");
  mask->add_option("--in", o.mask.in)->required();
  mask->add_option("--wordlist", o.mask.wordlist)->required();
  mask->add_option("--out", o.mask.out)->required();
  mask->add_option("--p", o.mask.p)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  mask->add_option("--pad", o.mask.pad)->capture_default_str();

  auto* eval = app.add_subcommand("evaluate", "Macro-F1 and per-class report");
  eval->add_option("--gold", o.eval.gold)->required();
  eval->add_option("--pred", o.eval.pred)->required();
  eval->add_option("--out", o.eval.out, "Also write the report here");

  auto* emb = app.add_subcommand("embeddings", "CEMB file utilities");
  emb->require_subcommand(1);
  auto* validate = emb->add_subcommand("validate", "Check a CEMB file");
  validate->add_option("--in", o.emb.in)->required();
  auto* pool = emb->add_subcommand("pool", "Mean-pool a token CEMB into a sentence CEMB");
  pool->add_option("--in", o.emb.in)->required();
  pool->add_option("--out", o.emb.out)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "curator: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  int status = kExitOk;
  std::string error;
  try {
    if (*pre) run_preprocess(o, out);
    else if (*semi) run_filter_semi(o, out);
    else if (*score) run_ted_score(o, out);
    else if (*select) run_ted_select(o, out);
    else if (*rank) run_ted_rank(o, out);
    else if (*merge) run_merge(o, out);
    else if (*ens) run_ensemble(o, out);
    else if (*models) run_select_models(o, out);
    else if (*mask) run_mask(o, out);
    else if (*eval) run_evaluate(o, out);
    else if (*validate) run_embeddings_validate(o, out);
    else if (*pool) run_embeddings_pool(o, out);
  } catch (const Error& e) {
    error = e.what();
    status = kExitInputError;
  } catch (const fs::filesystem_error& e) {
    error = e.what();
    status = kExitInputError;
  } catch (const std::exception& e) {
    error = std::string("internal error: ") + e.what();
    status = kExitInternalError;
  }
  if (!error.empty()) err << "curator: " << error << '\n';
  if (!o.log_path.empty()) append_log(o.log_path, app, args, status, error);
  return status;
}

int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace curator::cli

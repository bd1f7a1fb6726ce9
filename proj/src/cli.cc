// cli.cc

// Copyright 2026  The SRIC Authors
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

#include "sric/cli.h"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <CLI/CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "sric/augmentation.h"
#include "sric/config.h"
#include "sric/crossval.h"
#include "sric/hashtag_seg.h"
#include "sric/metrics.h"

namespace sric {

namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

void use_stderr_logger(const std::string& level) {
  auto logger = spdlog::get("sric");
  if (!logger) logger = spdlog::stderr_color_mt("sric");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(level));
}

template <typename T>
void add_override(CLI::App* cmd, const std::string& flag, const std::string& key,
                  Json& overrides, const std::string& help) {
  cmd->add_option_function<T>(
      flag, [&overrides, key](const T& value) { overrides[key] = value; }, help);
}

RunConfig resolve_config(const std::string& config_path, const Json& overrides) {
  Json merged = config_path.empty() ? Json::object() : read_config_file(config_path);
  merged.update(overrides);
  RunConfig cfg = RunConfig::from_json(merged);
  cfg.validate();
  return cfg;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

void write_json(const fs::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

// Non-JSON artifacts carry their metadata in a neighbouring file.
void write_sidecar(const fs::path& artifact, const RunConfig& cfg) {
  Json meta = artifact_meta(cfg);
  meta["artifact"] = artifact.filename().string();
  write_json(artifact.string() + ".meta.json", meta);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Post> load_corpus(const RunConfig& cfg) {
  require_path("corpus", cfg.corpus);
  return ingest_corpus(cfg.corpus, cfg.parsed_corpus_format());
}

Lexicon load_segmented_lexicon(const RunConfig& cfg) {
  require_path("lexicon", cfg.lexicon);
  Lexicon lexicon = load_lexicon(cfg.lexicon);
  bool missing = false;
  for (const auto& e : lexicon.entries()) missing |= e.segmented.empty();
  if (missing) {
    require_path("frequency_table", cfg.frequency_table_path());
    fill_segmentations(lexicon, FrequencyTable::load(cfg.frequency_table_path()));
  }
  return lexicon;
}

struct Checkpoint {
  Json document;
  std::string file_hash;
};

Checkpoint load_checkpoint(const std::string& field, const std::string& path) {
  require_path(field, path);
  std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("malformed checkpoint " + path + ": " + e.what());
  }
  if (j.value("format_version", 0) != kFormatVersion)
    throw Error("checkpoint " + path + " has an unsupported format version");
  return {std::move(j), fnv1a_hex(text)};
}

ModelState neural_model(const Checkpoint& ckpt, const std::string& field) {
  if (ckpt.document.value("kind", "") != "neural")
    throw ConfigError(field, "expected a neural checkpoint");
  return model_from_json(ckpt.document.at("model"));
}

Json checkpoint_document(const std::string& kind, const std::string& variant,
                         const RunConfig& cfg, Json model) {
  return {{"format_version", kFormatVersion},
          {"kind", kind},
          {"variant", variant},
          {"meta", artifact_meta(cfg)},
          {"model", std::move(model)}};
}

struct Split {
  std::vector<Post> train;
  std::vector<Post> validation;
};

Split holdout_split(std::span<const Post> posts, const RunConfig& cfg) {
  std::vector<std::string> ids;
  std::vector<SentimentLabel> labels;
  std::unordered_map<std::string, const Post*> by_id;
  for (const auto& p : posts) {
    ids.push_back(p.id);
    labels.push_back(p.label);
    by_id.emplace(p.id, &p);
  }
  Holdout h = stratified_holdout(ids, labels, cfg.val_fraction, cfg.seed);
  Split s;
  for (const auto& id : h.train) s.train.push_back(*by_id.at(id));
  for (const auto& id : h.validation) s.validation.push_back(*by_id.at(id));
  return s;
}

void write_history(const fs::path& path, const TrainHistory& history, const RunConfig& cfg) {
  std::ostringstream os;
  history.write_jsonl(os);
  write_text(path, os.str());
  write_sidecar(path, cfg);
}

std::vector<AugmentedSample> augment_with_cache(const RunConfig& cfg, const Checkpoint& ckpt,
                                                const ModelState& teacher,
                                                std::span<const Post> pool,
                                                const Lexicon& lexicon) {
  auto cache = cached_embeddings((fs::path(cfg.out) / "embedding_cache").string(), ckpt.file_hash,
                                 teacher, pool, lexicon);
  return augment_from_vectors(pool, cache.posts, cache.hashtags);
}

Json ok(const std::string& command, Json details) {
  Json j = {{"status", "ok"}, {"command", command}};
  j.update(details);
  return j;
}

Json cmd_synth(const RunConfig& cfg) {
  auto synthetic = generate_synthetic_corpus(cfg.seed, cfg.n_per_class, cfg.hashtag_rate);
  const fs::path corpus_path = fs::path(cfg.out) / "corpus.jsonl";
  const fs::path lexicon_path = fs::path(cfg.out) / "lexicon.tsv";
  std::ostringstream corpus, lexicon;
  write_corpus_jsonl(corpus, synthetic.posts);
  write_lexicon(lexicon, synthetic.lexicon);
  write_text(corpus_path, corpus.str());
  write_sidecar(corpus_path, cfg);
  write_text(lexicon_path, lexicon.str());
  write_sidecar(lexicon_path, cfg);
  return ok("synth", {{"corpus", corpus_path.string()},
                      {"lexicon", lexicon_path.string()},
                      {"posts", synthetic.posts.size()}});
}

Json cmd_segment(const RunConfig& cfg) {
  require_path("lexicon", cfg.lexicon);
  require_path("frequency_table", cfg.frequency_table_path());
  Lexicon lexicon = load_lexicon(cfg.lexicon);
  fill_segmentations(lexicon, FrequencyTable::load(cfg.frequency_table_path()));
  const fs::path path = fs::path(cfg.out) / "lexicon.segmented.tsv";
  std::ostringstream os;
  write_lexicon(os, lexicon);
  write_text(path, os.str());
  write_sidecar(path, cfg);
  return ok("segment", {{"lexicon", path.string()}, {"entries", lexicon.size()}});
}

Json cmd_train(const RunConfig& cfg) {
  auto corpus = load_corpus(cfg);
  Lexicon lexicon = load_segmented_lexicon(cfg);
  Variant variant = cfg.parsed_variant();
  CorpusPartition parts = partition(corpus, lexicon);
  if (parts.with_hashtags.empty()) throw Error("corpus has no post with a lexicon hashtag");
  Split split = holdout_split(parts.with_hashtags, cfg);
  const fs::path path = fs::path(cfg.out) / "checkpoint.json";

  if (variant == Variant::LrBaseline) {
    auto model = LrBaseline::fit(split.train, lexicon, cfg.logistic_config());
    write_json(path, checkpoint_document("lr_baseline", cfg.variant, cfg, model.to_json()));
    return ok("train", {{"checkpoint", path.string()}, {"variant", cfg.variant}});
  }
  TrainResult result = train_variant(variant, split.train, split.validation,
                                     parts.without_hashtags, lexicon, cfg, cfg.seed);
  Json doc = checkpoint_document("neural", cfg.variant, cfg, model_to_json(result.state));
  doc["loss_weights"] = loss_weights_to_json(result.weights);
  write_json(path, doc);
  const fs::path history = fs::path(cfg.out) / "history.jsonl";
  write_history(history, result.history, cfg);
  return ok("train", {{"checkpoint", path.string()},
                      {"history", history.string()},
                      {"variant", cfg.variant},
                      {"best_epoch", result.history.best_epoch},
                      {"stopped_epoch", result.history.stopped_epoch},
                      {"loss_weights", doc["loss_weights"]}});
}

Json cmd_augment(const RunConfig& cfg) {
  auto corpus = load_corpus(cfg);
  Lexicon lexicon = load_segmented_lexicon(cfg);
  Checkpoint ckpt = load_checkpoint("teacher_checkpoint", cfg.teacher_checkpoint);
  ModelState teacher = neural_model(ckpt, "teacher_checkpoint");
  CorpusPartition parts = partition(corpus, lexicon);
  auto samples = augment_with_cache(cfg, ckpt, teacher, parts.without_hashtags, lexicon);

  const fs::path jsonl = fs::path(cfg.out) / "augmented.jsonl";
  const fs::path summary = fs::path(cfg.out) / "augmentation_summary.json";
  std::ostringstream os, ss;
  write_augmented_jsonl(os, samples);
  write_text(jsonl, os.str());
  write_sidecar(jsonl, cfg);
  Json meta = {{"meta", artifact_meta(cfg)},
               {"teacher_checkpoint_hash", ckpt.file_hash},
               {"lexicon_size", lexicon.size()}};
  write_augmentation_summary(ss, samples, meta);
  write_text(summary, ss.str());
  return ok("augment", {{"augmented", jsonl.string()},
                        {"summary", summary.string()},
                        {"samples", samples.size()}});
}

Json cmd_train_student(const RunConfig& cfg) {
  auto corpus = load_corpus(cfg);
  Lexicon lexicon = load_segmented_lexicon(cfg);
  Checkpoint ckpt = load_checkpoint("teacher_checkpoint", cfg.teacher_checkpoint);
  ModelState teacher = neural_model(ckpt, "teacher_checkpoint");
  CorpusPartition parts = partition(corpus, lexicon);
  if (parts.with_hashtags.empty()) throw Error("corpus has no post with a lexicon hashtag");
  auto samples = augment_with_cache(cfg, ckpt, teacher, parts.without_hashtags, lexicon);

  Split split = holdout_split(parts.with_hashtags, cfg);
  const HashtagMode mode = teacher.text_mode;
  auto train_ex = make_examples(split.train, lexicon, mode, true);
  auto val_ex = make_examples(split.validation, lexicon, mode, true);
  TrainConfig tc = cfg.train_config();
  if (ckpt.document.contains("loss_weights"))
    tc.weights = loss_weights_from_json(ckpt.document.at("loss_weights"));
  TrainResult result = train_student(train_ex, parts.without_hashtags, samples, lexicon, val_ex,
                                     cfg.encoder_config(), cfg.dropout, mode, tc);

  const fs::path path = fs::path(cfg.out) / "student.json";
  Json doc = checkpoint_document("neural", "sric_augmented", cfg, model_to_json(result.state));
  doc["loss_weights"] = loss_weights_to_json(result.weights);
  doc["teacher_checkpoint_hash"] = ckpt.file_hash;
  write_json(path, doc);
  const fs::path history = fs::path(cfg.out) / "student_history.jsonl";
  write_history(history, result.history, cfg);
  return ok("train-student", {{"checkpoint", path.string()},
                              {"history", history.string()},
                              {"augmented_posts", samples.size()},
                              {"best_epoch", result.history.best_epoch}});
}

// Names the first inference-relevant field on which the checkpoint and the
// current configuration disagree.
void check_compatible(const Json& document, const RunConfig& cfg) {
  const Json& meta = document.at("meta");
  const Json stored = meta.value("compatibility", Json::object());
  if (meta.value("compatibility_hash", "") == cfg.compatibility_hash()) return;
  const Json wanted = cfg.compatibility_fields();
  for (const auto& [key, value] : wanted.items()) {
    if (!stored.contains(key) || stored.at(key) != value)
      throw ConfigError(key, "checkpoint was trained with " + key + "=" +
                                 (stored.contains(key) ? stored.at(key).dump() : "?") +
                                 " but the configuration has " + value.dump());
  }
  throw ConfigError("checkpoint", "checkpoint compatibility hash does not match");
}

Json cmd_evaluate(const RunConfig& cfg) {
  auto corpus = load_corpus(cfg);
  Lexicon lexicon = load_segmented_lexicon(cfg);
  Checkpoint ckpt = load_checkpoint("checkpoint", cfg.checkpoint);
  check_compatible(ckpt.document, cfg);
  if (corpus.empty()) throw Error("corpus is empty");

  std::vector<SentimentLabel> truth, pred;
  for (const auto& p : corpus) truth.push_back(p.label);
  const std::string kind = ckpt.document.value("kind", "");
  if (kind == "lr_baseline") {
    pred = LrBaseline::from_json(ckpt.document.at("model")).predict(corpus, lexicon);
  } else {
    ModelState model = neural_model(ckpt, "checkpoint");
    for (const auto& p : corpus) pred.push_back(predict(model, p, lexicon));
  }
  MetricsReport report = weighted_metrics(truth, pred);
  std::vector<int> t, q;
  for (auto l : truth) t.push_back(index_of(l));
  for (auto l : pred) q.push_back(index_of(l));
  CountMatrix cm = confusion_matrix(t, q, kNumSentiments);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < cm.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < cm.cols(); ++j) row.push_back(cm(i, j));
    rows.push_back(row);
  }
  Json doc = {{"meta", artifact_meta(cfg)},
              {"checkpoint_hash", ckpt.file_hash},
              {"checkpoint_config_hash", ckpt.document.at("meta").value("config_hash", "")},
              {"metrics", report.to_json()},
              {"confusion_matrix", rows}};
  const fs::path path = fs::path(cfg.out) / "metrics.json";
  write_json(path, doc);
  return ok("evaluate", {{"metrics", path.string()},
                         {"weighted_f1", round_decimals(report.weighted_f1, 4)}});
}

Json cmd_crossval(const RunConfig& cfg) {
  auto corpus = load_corpus(cfg);
  Lexicon lexicon = load_segmented_lexicon(cfg);
  std::vector<Variant> variants;
  if (cfg.variant == "all")
    variants.assign(kAllVariants.begin(), kAllVariants.end());
  else
    variants.push_back(cfg.parsed_variant());

  Json summary = Json::object();
  Json reports = Json::array();
  std::optional<Matrix> similarity;
  bool similarity_from_sric = false;
  for (Variant v : variants) {
    CrossvalResult result = run_crossval(corpus, lexicon, cfg, v);
    const fs::path path = fs::path(cfg.out) / ("crossval_" + std::string(to_string(v)) + ".json");
    write_json(path, crossval_json(result, cfg));
    reports.push_back(path.string());
    summary[std::string(to_string(v))] = format_mean_std(result.report.weighted_f1);
    if (result.similarity && (!similarity || (!similarity_from_sric && v == Variant::Sric))) {
      similarity = std::move(result.similarity);
      similarity_from_sric = v == Variant::Sric;
    }
  }
  Json details = {{"reports", reports}, {"weighted_f1", summary}};
  if (similarity) {
    const fs::path csv = fs::path(cfg.out) / "similarity_matrix.csv";
    std::ostringstream os;
    write_similarity_csv(os, lexicon, *similarity);
    write_text(csv, os.str());
    write_sidecar(csv, cfg);
    details["similarity_matrix"] = csv.string();
  }
  return ok("crossval", details);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hashtag-aware hate and counter-hate classification toolkit", "sric"};
  app.require_subcommand(1);
  std::string config_path;
  std::string log_level = "info";
  Json overrides = Json::object();

  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off");
  add_override<std::uint64_t>(&app, "--seed", "seed", overrides, "random seed");
  add_override<std::string>(&app, "--out", "out", overrides, "output directory");
  add_override<int>(&app, "--jobs", "jobs", overrides, "parallel folds in crossval");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };
  auto corpus_opts = [&](CLI::App* cmd) {
    add_override<std::string>(cmd, "--corpus", "corpus", overrides, "corpus file (.jsonl or .csv)");
    add_override<std::string>(cmd, "--lexicon", "lexicon", overrides, "hashtag lexicon TSV");
  };

  CLI::App* synth = sub("synth", "generate a synthetic corpus and lexicon");
  add_override<int>(synth, "--n-per-class", "n_per_class", overrides, "posts per class");
  add_override<double>(synth, "--rate", "hashtag_rate", overrides, "fraction with a hashtag");

  CLI::App* segment = sub("segment", "fill lexicon segmentations");
  add_override<std::string>(segment, "--lexicon", "lexicon", overrides, "hashtag lexicon TSV");
  add_override<std::string>(segment, "--freq", "frequency_table", overrides,
                            "word frequency table");

  CLI::App* train_cmd = sub("train", "train a model on the posts with lexicon hashtags");
  corpus_opts(train_cmd);
  add_override<std::string>(train_cmd, "--variant", "variant", overrides, "experiment variant");

  CLI::App* augment = sub("augment", "assign pseudo-hashtags with a teacher");
  corpus_opts(augment);
  add_override<std::string>(augment, "--teacher", "teacher_checkpoint", overrides,
                            "teacher checkpoint");

  CLI::App* student = sub("train-student", "train a student on original and augmented posts");
  corpus_opts(student);
  add_override<std::string>(student, "--teacher", "teacher_checkpoint", overrides,
                            "teacher checkpoint");

  CLI::App* evaluate = sub("evaluate", "score a checkpoint on a corpus");
  corpus_opts(evaluate);
  add_override<std::string>(evaluate, "--checkpoint", "checkpoint", overrides, "checkpoint");
  add_override<std::string>(evaluate, "--variant", "variant", overrides, "experiment variant");

  CLI::App* crossval = sub("crossval", "k-fold cross-validation of one or all variants");
  corpus_opts(crossval);
  add_override<std::string>(crossval, "--variant", "variant", overrides,
                            "experiment variant or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "config"}, {"field", "arguments"}, {"message", e.what()}}.dump() << '\n';
    return kExitConfigError;
  }

  try {
    use_stderr_logger(log_level);
    RunConfig cfg = resolve_config(config_path, overrides);
    Json result;
    if (synth->parsed()) result = cmd_synth(cfg);
    else if (segment->parsed()) result = cmd_segment(cfg);
    else if (train_cmd->parsed()) result = cmd_train(cfg);
    else if (augment->parsed()) result = cmd_augment(cfg);
    else if (student->parsed()) result = cmd_train_student(cfg);
    else if (evaluate->parsed()) result = cmd_evaluate(cfg);
    else result = cmd_crossval(cfg);
    result["config_hash"] = cfg.hash();
    out << result.dump() << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    err << Json{{"error", "config"}, {"field", e.field()}, {"message", e.what()}}.dump() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << Json{{"error", "runtime"}, {"message", e.what()}}.dump() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace sric

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "textsweep/evaluation.hpp"

namespace textsweep {

// One evaluated configuration, as persisted to the JSON-lines results file.
struct SweepRecord {
  std::string config_id;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::vector<std::pair<double, double>> per_fold;
  double wall_time = 0.0;  // seconds; measurement metadata, not a result
  std::string split = "train-cv";

  nlohmann::json to_json() const;
  static SweepRecord from_json(const nlohmann::json& j);
};

enum class SpaceMode { single, combos };

// All 127 non-empty tokenizer subsets, ordered by their canonical "tok=..."
// fragment.
const std::vector<std::uint8_t>& tokenizer_subsets();

// single: the 15-flag factorial crossed with each of the 7 tokenizers
// (7 * 2^15 = 229,376 configurations); combos: crossed with all 127
// subsets. Enumeration follows canonical config-id order.
std::vector<Configuration> enumerate_space(SpaceMode mode);

// The handcrafted flag assignment (tfidf, emo, num, usr, lc on; the rest
// off) crossed with the 127 subsets, or with the reduced 16-subset family
// whose members always contain w1 and q3 plus at least three of the rest.
std::vector<Configuration> fast_preset(bool reduced = false);
Configuration fast_preset_flags();
const std::vector<std::uint8_t>& reduced_tokenizer_subsets();

struct SweepOptions {
  int workers = 1;
  bool resume = false;
  std::string split = "train-cv";  // "train-cv" or "gold"
  int folds = 5;
  std::uint64_t seed = 42;
  TrainParams train;
};

struct SweepSummary {
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::optional<SweepRecord> best;  // highest accuracy, ties by config_id
};

// Evaluates every configuration and appends one record per line to
// `out_path` (flushed as completed, so an interrupted run keeps partial
// results). On completion the file is rewritten sorted by (config_id,
// split). With resume, configurations already present are skipped. Results
// are a pure function of (corpus, configs, seed); the worker count only
// changes scheduling.
SweepSummary run_sweep(const std::vector<Document>& corpus,
                       const std::vector<Document>* gold,
                       const std::vector<Configuration>& configs,
                       const LexiconSet& lex, const LemmaMap* lemmas,
                       const std::string& out_path, const SweepOptions& options);

std::vector<SweepRecord> load_records(const std::string& path);

struct TopKRow {
  std::size_t k = 0;         // requested k
  std::size_t used = 0;      // records actually available
  bool truncated = false;    // k exceeded the record count
  double accuracy = 0.0;     // minimum accuracy within the top-k set
  double macro_f1 = 0.0;     // macro-F1 of the record attaining that minimum
  std::array<double, kNumFlags> flag_probs{};
  std::array<double, kNumTokenizers> tok_probs{};
};

// Records are ranked by accuracy descending with ties broken by config_id
// ascending. ks must be sorted ascending.
std::vector<TopKRow> topk(std::vector<SweepRecord> records,
                          const std::vector<std::size_t>& ks);
std::vector<std::size_t> default_topk_ks();  // 1,2,4,...,512

// TSV table: k, accuracy, macro-F1, then one column per flag in the order
// tfidf, del-sw, lem, stem, del-d1, del-d2, del-punc, del-diac, del-ent,
// emo, num, url, usr, lc, neg, then one column per tokenizer.
std::string topk_to_tsv(const std::vector<TopKRow>& rows);

// Takes the m best records of a single-tokenizer sweep, strips their
// tokenizer and crosses the flag assignments with all 127 subsets,
// deduplicated, in canonical order.
std::vector<Configuration> expand_combinations(std::vector<SweepRecord> records,
                                               std::size_t m = 32);

}  // namespace textsweep

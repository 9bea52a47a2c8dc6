// Acceptance suite: runs every criterion and prints one pass/fail line per
// criterion. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "textsweep/corpus.hpp"
#include "textsweep/evaluation.hpp"
#include "textsweep/rng.hpp"
#include "textsweep/sweep.hpp"
#include "textsweep/textnorm.hpp"
#include "textsweep/tokenizers.hpp"
#include "textsweep/utf8.hpp"

using namespace textsweep;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<void()> body;
};

int failures = 0;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void run(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.body();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("PASS  criterion %2d: %s (%.2fs)\n", c.number, c.name.c_str(), secs);
  } catch (const std::exception& e) {
    ++failures;
    std::printf("FAIL  criterion %2d: %s -- %s\n", c.number, c.name.c_str(), e.what());
  }
  std::fflush(stdout);
}

const char* kTweet =
    "pésiiiimo auto :( @autoX fallan frenos y sistema de entretenimiento; "
    "no lo compren";

// The published 4-gram list for the transformed example text. The figure's
// text carries one leading and one trailing space, so the boundary grams
// "_pes" and "ren_" only appear when the text is padded the same way.
const std::vector<std::string> kExample2Grams = {
    "_pes", "pesi", "esii", "siii", "iiii", "iiim", "iimo", "imo_", "mo_a",
    "o_au", "_aut", "auto", "uto_", "to__", "o__n", "__ne", "_neg", "nega",
    "egat", "gati", "ativ", "tivo", "ivo_", "vo__", "o__u", "__us", "_use",
    "user", "ser_", "er_f", "r_fa", "_fal", "fall", "alla", "llan", "lan_",
    "an_f", "n_fr", "_fre", "fren", "reno", "enos", "nos_", "os_y", "s_y_",
    "_y_s", "y_si", "_sis", "sist", "iste", "stem", "tema", "ema_", "ma_d",
    "a_de", "_de_", "de_e", "e_en", "_ent", "entr", "ntre", "tret", "rete",
    "eten", "teni", "enim", "nimi", "imie", "mien", "ient", "ento", "nto_",
    "to_;", "o_;_", "_;_l", ";_lo", "_lo_", "lo_n", "o_no", "_no_", "no_c",
    "o_co", "_com", "comp", "ompr", "mpre", "pren", "ren_"};

std::set<std::string> distinct(const TokenBag& bag) {
  std::set<std::string> s;
  for (const auto& [tok, n] : bag.counts) s.insert(tok);
  return s;
}

Configuration with_flags(std::initializer_list<Flag> flags,
                         std::initializer_list<Tokenizer> toks = {Tokenizer::w1}) {
  Configuration cfg;
  for (Flag f : flags) cfg.set(f);
  for (Tokenizer t : toks) cfg.add(t);
  return cfg;
}

std::string data_path(const std::string& name) {
  return std::string(TEXTSWEEP_DATA_DIR) + "/" + name;
}

// --- criterion bodies -------------------------------------------------

void golden_transformations() {
  const LexiconSet lex = load_lexicon_dir(TEXTSWEEP_DATA_DIR);
  const LemmaMap lemmas = load_lemmas_dir(TEXTSWEEP_DATA_DIR);

  const auto cfg1 =
      with_flags({Flag::stem, Flag::del_d1, Flag::del_diac, Flag::usr, Flag::neg});
  require(normalize(kTweet, cfg1, lex, &lemmas) ==
              "pesim aut :( _user fal fren y sistem de entreten ; lo no_compr",
          "first transformed string mismatch");

  const auto cfg2 =
      with_flags({Flag::del_diac, Flag::emo, Flag::usr, Flag::lc, Flag::neg});
  const std::string transformed = normalize(kTweet, cfg2, lex, &lemmas);
  require(transformed ==
              "pesiiiimo auto _negativo _user fallan frenos y sistema de "
              "entretenimiento ; lo no_compren",
          "second transformed string mismatch");

  // the published gram list, reproduced exactly once the figure's
  // surrounding spaces are restored
  const std::set<std::string> published(kExample2Grams.begin(), kExample2Grams.end());
  require(published.size() == 88, "published gram list should have 88 entries");
  const auto padded = distinct(tokenize_qgrams(" " + transformed + " ", 4));
  require(padded == published, "padded 4-gram set differs from the published list");

  std::set<std::string> interior = published;
  interior.erase("_pes");
  interior.erase("ren_");
  require(distinct(tokenize_qgrams(transformed, 4)) == interior,
          "4-gram set differs from the published list minus boundary grams");
}

void tokenizer_arithmetic() {
  Rng rng(2024);
  static const std::vector<std::string> pieces = [] {
    std::vector<std::string> p;
    for (const char32_t cp : utf8::decode("abcdefghij XYZ,.;:!? 012ñá ")) {
      std::string one;
      utf8::append(one, cp);
      p.push_back(one);
    }
    return p;
  }();
  for (int i = 0; i < 1000; ++i) {
    std::string s;
    const std::size_t len = rng.below(60);
    for (std::size_t k = 0; k < len; ++k) s += pieces[rng.below(pieces.size())];

    const std::int64_t m = static_cast<std::int64_t>(utf8::decode(s).size());
    for (int q = 3; q <= 7; ++q) {
      const std::int64_t expect = std::max<std::int64_t>(0, m - q + 1);
      require(static_cast<std::int64_t>(tokenize_qgrams(s, q).total()) == expect,
              "q-gram count mismatch");
    }
    std::int64_t words = 0;
    bool in_word = false;
    for (const char c : s) {
      if (c == ' ') {
        in_word = false;
      } else if (!in_word) {
        in_word = true;
        ++words;
      }
    }
    for (int n = 1; n <= 2; ++n) {
      const std::int64_t expect = std::max<std::int64_t>(0, words - n + 1);
      require(static_cast<std::int64_t>(tokenize_words(s, n).total()) == expect,
              "n-word count mismatch");
    }
  }
}

void jaccard_robustness() {
  const std::string t = "I like vanilla";
  const std::string tp = "I lik3 vanila";
  const double words = jaccard(tokenize_words(t, 1), tokenize_words(tp, 1));
  require(words == 0.2, "word-level Jaccard must be exactly 0.2");

  // brute-force set oracle over the underscore strings
  const auto grams = [](std::string s, int q) {
    for (auto& c : s) {
      if (c == ' ') c = '_';
    }
    std::set<std::string> out;
    for (std::size_t i = 0; i + q <= s.size(); ++i) out.insert(s.substr(i, q));
    return out;
  };
  const auto a = grams(t, 3);
  const auto b = grams(tp, 3);
  std::size_t inter = 0;
  for (const auto& g : a) inter += b.count(g);
  const double oracle =
      static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
  const double q3 = jaccard(tokenize_qgrams(t, 3), tokenize_qgrams(tp, 3));
  require(q3 == oracle, "3-gram Jaccard must equal the set oracle exactly");
  require(q3 > words, "3-gram similarity must exceed the word-level one");
}

void space_counting() {
  const auto singles = enumerate_space(SpaceMode::single);
  require(singles.size() == 229376, "single space must have 229,376 configurations");
  std::unordered_set<std::string> ids;
  ids.reserve(singles.size() * 2);
  for (const auto& cfg : singles) {
    require(ids.insert(cfg.id()).second, "duplicate config id in single space");
  }
  require(tokenizer_subsets().size() == 127, "127 non-empty tokenizer subsets");
  require(reduced_tokenizer_subsets().size() == 16, "16 reduced subsets");

  std::vector<SweepRecord> records;
  for (std::uint32_t i = 0; i < 32; ++i) {
    Configuration cfg;
    cfg.flags = static_cast<std::uint16_t>(i * 37 % (1u << kNumFlags));
    cfg.add(Tokenizer::q4);
    SweepRecord r;
    r.config_id = cfg.id();
    r.accuracy = 0.5 + 0.001 * static_cast<double>(i);
    records.push_back(r);
  }
  require(expand_combinations(records, 32).size() == 4064,
          "expanding 32 distinct flag assignments must give 4,064 configurations");
}

void topk_properties() {
  Rng rng(512);
  std::vector<SweepRecord> synthetic;
  std::unordered_set<std::string> seen;
  while (synthetic.size() < 512) {
    Configuration cfg;
    cfg.flags = static_cast<std::uint16_t>(rng.below(1u << kNumFlags));
    cfg.tokenizers = static_cast<std::uint8_t>(1 + rng.below(127));
    if (!seen.insert(cfg.id()).second) continue;
    SweepRecord r;
    r.config_id = cfg.id();
    r.accuracy = rng.unit();
    r.macro_f1 = rng.unit();
    synthetic.push_back(r);
  }
  const auto rows = topk(synthetic, default_topk_ks());
  for (const double p : rows.front().flag_probs) {
    require(p == 0.0 || p == 1.0, "k=1 probabilities must be 0 or 1");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    require(rows[i].accuracy <= rows[i - 1].accuracy,
            "top-k accuracy column must be non-increasing");
  }

  // full 15-flag factorial: every probability is exactly one half
  std::vector<SweepRecord> factorial;
  factorial.reserve(1u << kNumFlags);
  for (std::uint32_t bits = 0; bits < (1u << kNumFlags); ++bits) {
    Configuration cfg;
    cfg.flags = static_cast<std::uint16_t>(bits);
    cfg.add(Tokenizer::q5);
    SweepRecord r;
    r.config_id = cfg.id();
    r.accuracy = rng.unit();
    factorial.push_back(r);
  }
  const auto full = topk(factorial, {factorial.size()});
  for (const double p : full.front().flag_probs) {
    require(p == 0.5, "full-factorial probabilities must be exactly 0.5");
  }
}

void classifier_sanity() {
  const LexiconSet lex;
  const auto corpus = load_corpus(data_path("mini_corpus.tsv"));
  require(corpus.size() == 400, "bundled mini corpus must have 400 documents");
  Configuration cfg;
  cfg.add(Tokenizer::w1);

  const auto result = cross_validate(corpus, cfg, lex, nullptr, 5, 42);
  require(result.accuracy >= 0.99, "pooled accuracy must be >= 0.99");
  require(result.macro_f1 >= 0.99, "pooled macro-F1 must be >= 0.99");

  const auto rerun = cross_validate(corpus, cfg, lex, nullptr, 5, 42);
  require(rerun.accuracy == result.accuracy && rerun.confusion == result.confusion &&
              rerun.per_fold == result.per_fold,
          "rerun must be identical");

  // worker counts must not change sweep records for this evaluation
  const std::vector<Configuration> one = {cfg};
  const auto tmp = std::filesystem::temp_directory_path();
  const std::string p1 = (tmp / "tsw_acc6_w1.jsonl").string();
  const std::string p2 = (tmp / "tsw_acc6_w2.jsonl").string();
  SweepOptions o1, o2;
  o1.workers = 1;
  o2.workers = 2;
  run_sweep(corpus, nullptr, one, lex, nullptr, p1, o1);
  run_sweep(corpus, nullptr, one, lex, nullptr, p2, o2);
  auto r1 = load_records(p1), r2 = load_records(p2);
  require(r1.size() == 1 && r2.size() == 1, "one record per sweep expected");
  require(r1[0].config_id == r2[0].config_id && r1[0].accuracy == r2[0].accuracy &&
              r1[0].macro_f1 == r2[0].macro_f1 && r1[0].per_fold == r2[0].per_fold,
          "records must not depend on the worker count");
  std::remove(p1.c_str());
  std::remove(p2.c_str());
  require(r1[0].accuracy >= 0.99, "sweep-reported accuracy must be >= 0.99");
}

void combined_tokenizer_improvement() {
  // keyword signal plus injected misspellings: character grams recover the
  // corrupted keywords that whole-word features lose
  SyntheticParams params;
  params.n_docs = 400;
  params.vocab_size = 1000;
  params.seed = 99;
  params.misspell_prob = 0.3;
  const auto corpus = gen_synthetic(params);
  const LexiconSet lex;

  Configuration w1_only = fast_preset_flags();
  w1_only.add(Tokenizer::w1);
  const double w1_accuracy =
      cross_validate(corpus, w1_only, lex, nullptr, 5, 42).accuracy;

  double best_multi = 0.0;
  for (const auto& cfg : fast_preset(true)) {
    const double acc = cross_validate(corpus, cfg, lex, nullptr, 5, 42).accuracy;
    best_multi = std::max(best_multi, acc);
  }
  std::ostringstream msg;
  msg << "best multi " << best_multi << " vs w1 " << w1_accuracy;
  require(best_multi >= w1_accuracy, "multi-tokenizer must not lose: " + msg.str());
}

void heaps_fit_check() {
  SyntheticParams params;
  params.n_docs = 4000;
  params.vocab_size = 50000;
  params.zipf_s = 1.0;
  params.seed = 31;
  params.min_tokens = 40;
  params.max_tokens = 60;
  const auto docs = gen_synthetic(params);
  std::vector<std::string> texts;
  for (const auto& d : docs) texts.push_back(d.text);

  const auto fit = heaps_fit(texts, 2000);
  require(fit.alpha > 0.0 && fit.alpha < 1.0, "alpha must lie in (0,1)");

  // independent reference regression over the identical points
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(fit.points.size());
  for (const auto& [tn, tv] : fit.points) {
    const double x = std::log(static_cast<double>(tn));
    const double y = std::log(static_cast<double>(tv));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double reference = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  require(std::abs(fit.alpha - reference) <= 1e-9,
          "alpha must match the reference regression to 1e-9");

  SyntheticParams noisy = params;
  noisy.misspell_prob = 0.15;
  std::vector<std::string> noisy_texts;
  for (const auto& d : gen_synthetic(noisy)) noisy_texts.push_back(d.text);
  const auto noisy_fit = heaps_fit(noisy_texts, 2000);
  require(noisy_fit.alpha > fit.alpha,
          "misspelling-injected stream must have strictly larger alpha");
}

void metric_oracles() {
  Rng rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Label> gold, pred;
    const std::size_t n = 1 + rng.below(64);
    for (std::size_t i = 0; i < n; ++i) {
      gold.push_back(static_cast<Label>(rng.below(4)));
      pred.push_back(static_cast<Label>(rng.below(4)));
    }
    // confusion-matrix brute force
    double conf[4][4] = {};
    for (std::size_t i = 0; i < n; ++i) {
      conf[static_cast<int>(gold[i])][static_cast<int>(pred[i])] += 1.0;
    }
    double correct = 0;
    for (int c = 0; c < 4; ++c) correct += conf[c][c];
    const double acc_oracle = correct / static_cast<double>(n);
    double f1_sum = 0;
    for (int c = 0; c < 4; ++c) {
      double tp = conf[c][c], fp = 0, fn = 0;
      for (int o = 0; o < 4; ++o) {
        if (o != c) {
          fp += conf[o][c];
          fn += conf[c][o];
        }
      }
      const double p = tp + fp > 0 ? tp / (tp + fp) : 0.0;
      const double r = tp + fn > 0 ? tp / (tp + fn) : 0.0;
      f1_sum += p + r > 0 ? 2 * p * r / (p + r) : 0.0;
    }
    require(std::abs(accuracy(gold, pred) - acc_oracle) <= 1e-12, "accuracy oracle");
    require(std::abs(macro_f1(gold, pred) - f1_sum / 4.0) <= 1e-12, "macro-F1 oracle");
  }
}

std::string canonical_results(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open results file " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    j.erase("wall_time");  // wall-clock measurement differs run to run
    lines.push_back(j.dump());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out.push_back('\n');
  }
  return out;
}

void sweep_determinism() {
  const auto tmp = std::filesystem::temp_directory_path();
  const std::string r1 = (tmp / "tsw_acc10_w1.jsonl").string();
  const std::string r4 = (tmp / "tsw_acc10_w4.jsonl").string();
  const std::string corpus = data_path("mini_corpus.tsv");
  const std::string cli = TEXTSWEEP_CLI_PATH;

  const auto sweep_cmd = [&](int workers, const std::string& out) {
    const std::string cmd = cli + " sweep --corpus " + corpus +
                            " --space fast --workers " + std::to_string(workers) +
                            " --out " + out + " > /dev/null";
    require(std::system(cmd.c_str()) == 0, "sweep command failed: " + cmd);
  };
  sweep_cmd(1, r1);
  sweep_cmd(4, r4);

  require(load_records(r1).size() == 127, "fast preset must produce 127 records");
  require(canonical_results(r1) == canonical_results(r4),
          "sorted results must be byte-identical across worker counts");
  std::remove(r1.c_str());
  std::remove(r4.c_str());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden transformations and published 4-gram bag", golden_transformations},
      {2, "tokenizer count arithmetic on 1,000 random strings", tokenizer_arithmetic},
      {3, "Jaccard robustness on the reference pair", jaccard_robustness},
      {4, "configuration-space counting", space_counting},
      {5, "top-k probability properties", topk_properties},
      {6, "classifier sanity on the bundled corpus", classifier_sanity},
      {7, "combined tokenizers never lose to single words", combined_tokenizer_improvement},
      {8, "vocabulary-growth fit against reference regression", heaps_fit_check},
      {9, "metric oracles on random label pairs", metric_oracles},
      {10, "sweep determinism across worker counts", sweep_determinism},
  };
  for (const auto& c : criteria) run(c);
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}

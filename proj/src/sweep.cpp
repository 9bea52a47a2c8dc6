#include "textsweep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace textsweep {

nlohmann::json SweepRecord::to_json() const {
  nlohmann::json j;
  j["config_id"] = config_id;
  j["accuracy"] = accuracy;
  j["macro_f1"] = macro_f1;
  nlohmann::json folds = nlohmann::json::array();
  for (const auto& [acc, f1] : per_fold) folds.push_back({acc, f1});
  j["per_fold"] = folds;
  j["wall_time"] = wall_time;
  j["split"] = split;
  return j;
}

SweepRecord SweepRecord::from_json(const nlohmann::json& j) {
  SweepRecord r;
  r.config_id = j.at("config_id").get<std::string>();
  r.accuracy = j.at("accuracy").get<double>();
  r.macro_f1 = j.at("macro_f1").get<double>();
  for (const auto& pair : j.at("per_fold")) {
    r.per_fold.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  r.wall_time = j.at("wall_time").get<double>();
  r.split = j.at("split").get<std::string>();
  return r;
}

const std::vector<std::uint8_t>& tokenizer_subsets() {
  static const std::vector<std::uint8_t> subsets = [] {
    std::vector<std::uint8_t> s;
    for (unsigned bits = 1; bits < (1u << kNumTokenizers); ++bits) {
      s.push_back(static_cast<std::uint8_t>(bits));
    }
    std::sort(s.begin(), s.end(), [](std::uint8_t a, std::uint8_t b) {
      return tokenizer_set_name(a) < tokenizer_set_name(b);
    });
    return s;
  }();
  return subsets;
}

const std::vector<std::uint8_t>& reduced_tokenizer_subsets() {
  static const std::vector<std::uint8_t> subsets = [] {
    constexpr std::uint8_t required =
        (1u << static_cast<int>(Tokenizer::w1)) | (1u << static_cast<int>(Tokenizer::q3));
    std::vector<std::uint8_t> s;
    for (const std::uint8_t bits : tokenizer_subsets()) {
      if ((bits & required) != required) continue;
      if (std::popcount(static_cast<unsigned>(bits & ~required)) >= 3) s.push_back(bits);
    }
    return s;
  }();
  return subsets;
}

namespace {

std::vector<Configuration> cross_flags_with_subsets(const std::vector<std::uint8_t>& subsets) {
  std::vector<Configuration> out;
  out.reserve(subsets.size() << kNumFlags);
  // counter bits are consumed most-significant-first so that enumeration
  // order equals canonical config-id order
  for (std::uint32_t counter = 0; counter < (1u << kNumFlags); ++counter) {
    Configuration cfg;
    for (int i = 0; i < kNumFlags; ++i) {
      if (counter >> (kNumFlags - 1 - i) & 1) cfg.set(static_cast<Flag>(i));
    }
    for (const std::uint8_t subset : subsets) {
      cfg.tokenizers = subset;
      out.push_back(cfg);
    }
  }
  return out;
}

}  // namespace

std::vector<Configuration> enumerate_space(SpaceMode mode) {
  if (mode == SpaceMode::combos) return cross_flags_with_subsets(tokenizer_subsets());
  std::vector<std::uint8_t> singles;
  for (const std::uint8_t s : tokenizer_subsets()) {
    if (std::popcount(static_cast<unsigned>(s)) == 1) singles.push_back(s);
  }
  return cross_flags_with_subsets(singles);
}

Configuration fast_preset_flags() {
  Configuration cfg;
  cfg.set(Flag::tfidf);
  cfg.set(Flag::emo);
  cfg.set(Flag::num);
  cfg.set(Flag::usr);
  cfg.set(Flag::lc);
  return cfg;
}

std::vector<Configuration> fast_preset(bool reduced) {
  const auto& subsets = reduced ? reduced_tokenizer_subsets() : tokenizer_subsets();
  std::vector<Configuration> out;
  out.reserve(subsets.size());
  Configuration cfg = fast_preset_flags();
  for (const std::uint8_t subset : subsets) {
    cfg.tokenizers = subset;
    out.push_back(cfg);
  }
  return out;
}

std::vector<SweepRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open results file: " + path);
  std::vector<SweepRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      records.push_back(SweepRecord::from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

SweepSummary run_sweep(const std::vector<Document>& corpus,
                       const std::vector<Document>* gold,
                       const std::vector<Configuration>& configs,
                       const LexiconSet& lex, const LemmaMap* lemmas,
                       const std::string& out_path, const SweepOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (options.split != "train-cv" && options.split != "gold")
    throw std::invalid_argument("split must be 'train-cv' or 'gold'");
  if (options.split == "gold" && gold == nullptr)
    throw std::invalid_argument("gold split requires a gold corpus");

  std::vector<SweepRecord> existing;
  std::unordered_set<std::string> done;
  if (options.resume && std::filesystem::exists(out_path)) {
    existing = load_records(out_path);
    for (const auto& r : existing) done.insert(r.config_id + "\n" + r.split);
  }

  std::vector<const Configuration*> todo;
  SweepSummary summary;
  for (const auto& cfg : configs) {
    if (done.count(cfg.id() + "\n" + options.split) > 0) {
      ++summary.skipped;
    } else {
      todo.push_back(&cfg);
    }
  }

  std::ofstream out(out_path, options.resume ? std::ios::app : std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open results sink: " + out_path);

  std::vector<SweepRecord> fresh(todo.size());
  std::atomic<std::size_t> next{0};
  std::mutex sink_mutex;
  std::exception_ptr worker_error;

  const auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      const Configuration& cfg = *todo[i];
      const auto t0 = std::chrono::steady_clock::now();
      EvalResult eval;
      if (options.split == "gold") {
        TrainParams params = options.train;
        params.seed = options.seed;
        eval = evaluate_gold(corpus, *gold, cfg, lex, lemmas, params);
      } else {
        eval = cross_validate(corpus, cfg, lex, lemmas, options.folds, options.seed,
                              options.train);
      }
      SweepRecord record;
      record.config_id = cfg.id();
      record.accuracy = eval.accuracy;
      record.macro_f1 = eval.macro_f1;
      record.per_fold = eval.per_fold;
      record.split = options.split;
      record.wall_time =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      fresh[i] = record;
      const std::lock_guard<std::mutex> lock(sink_mutex);
      out << record.to_json().dump() << '\n';
      out.flush();
    }
  };

  if (options.workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < options.workers; ++w) {
      pool.emplace_back([&] {
        try {
          work();
        } catch (...) {
          const std::lock_guard<std::mutex> lock(sink_mutex);
          if (!worker_error) worker_error = std::current_exception();
          next.store(todo.size());
        }
      });
    }
    for (auto& t : pool) t.join();
    if (worker_error) std::rethrow_exception(worker_error);
  }
  out.close();
  summary.evaluated = todo.size();

  // rewrite sorted by (config_id, split) so the final file is independent
  // of worker scheduling
  std::vector<SweepRecord> all = std::move(existing);
  all.insert(all.end(), fresh.begin(), fresh.end());
  std::sort(all.begin(), all.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.config_id != b.config_id) return a.config_id < b.config_id;
    return a.split < b.split;
  });
  const std::string tmp_path = out_path + ".tmp";
  {
    std::ofstream sorted(tmp_path, std::ios::trunc);
    if (!sorted) throw std::runtime_error("cannot write results sink: " + tmp_path);
    for (const auto& r : all) sorted << r.to_json().dump() << '\n';
  }
  std::filesystem::rename(tmp_path, out_path);

  for (const auto& r : all) {
    if (r.split != options.split) continue;
    if (!summary.best || r.accuracy > summary.best->accuracy ||
        (r.accuracy == summary.best->accuracy && r.config_id < summary.best->config_id)) {
      summary.best = r;
    }
  }
  return summary;
}

std::vector<std::size_t> default_topk_ks() {
  return {1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
}

std::vector<TopKRow> topk(std::vector<SweepRecord> records,
                          const std::vector<std::size_t>& ks) {
  if (records.empty()) throw std::invalid_argument("no records");
  if (!std::is_sorted(ks.begin(), ks.end()))
    throw std::invalid_argument("ks must be sorted ascending");
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
    return a.config_id < b.config_id;
  });
  std::vector<Configuration> parsed;
  parsed.reserve(records.size());
  for (const auto& r : records) parsed.push_back(parse_config_id(r.config_id));

  std::vector<TopKRow> rows;
  for (const std::size_t k : ks) {
    TopKRow row;
    row.k = k;
    row.used = std::min(k, records.size());
    row.truncated = k > records.size();
    const SweepRecord& worst = records[row.used - 1];
    row.accuracy = worst.accuracy;
    row.macro_f1 = worst.macro_f1;
    for (std::size_t i = 0; i < row.used; ++i) {
      for (int f = 0; f < kNumFlags; ++f) {
        if (parsed[i].test(static_cast<Flag>(f))) row.flag_probs[f] += 1.0;
      }
      for (int t = 0; t < kNumTokenizers; ++t) {
        if (parsed[i].has(static_cast<Tokenizer>(t))) row.tok_probs[t] += 1.0;
      }
    }
    for (auto& p : row.flag_probs) p /= static_cast<double>(row.used);
    for (auto& p : row.tok_probs) p /= static_cast<double>(row.used);
    rows.push_back(row);
  }
  return rows;
}

std::string topk_to_tsv(const std::vector<TopKRow>& rows) {
  static constexpr std::array<Flag, kNumFlags> kColumnOrder = {
      Flag::tfidf, Flag::del_sw, Flag::lem,      Flag::stem,    Flag::del_d1,
      Flag::del_d2, Flag::del_punc, Flag::del_diac, Flag::del_ent, Flag::emo,
      Flag::num,   Flag::url,    Flag::usr,      Flag::lc,      Flag::neg};
  std::string out = "k\taccuracy\tmacro-F1";
  for (const Flag f : kColumnOrder) {
    std::string name = flag_name(f);
    std::replace(name.begin(), name.end(), '_', '-');
    out.push_back('\t');
    out += name;
  }
  for (int t = 0; t < kNumTokenizers; ++t) {
    out.push_back('\t');
    out += tokenizer_name(static_cast<Tokenizer>(t));
  }
  out.push_back('\n');
  char buf[32];
  const auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.4f", v);
    out += buf;
  };
  for (const auto& row : rows) {
    out += std::to_string(row.k);
    if (row.truncated) out += "*";
    out.push_back('\t');
    num(row.accuracy);
    out.push_back('\t');
    num(row.macro_f1);
    for (const Flag f : kColumnOrder) {
      out.push_back('\t');
      num(row.flag_probs[static_cast<int>(f)]);
    }
    for (int t = 0; t < kNumTokenizers; ++t) {
      out.push_back('\t');
      num(row.tok_probs[t]);
    }
    out.push_back('\n');
  }
  if (!rows.empty() && rows.back().truncated) {
    out += "# rows marked * were truncated to the available record count\n";
  }
  return out;
}

std::vector<Configuration> expand_combinations(std::vector<SweepRecord> records,
                                               std::size_t m) {
  if (records.empty()) throw std::invalid_argument("no records");
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
    return a.config_id < b.config_id;
  });
  const std::size_t take = std::min(m, records.size());
  std::set<std::pair<std::uint16_t, std::uint8_t>> seen;  // (order key, subset)
  for (std::size_t i = 0; i < take; ++i) {
    const Configuration base = parse_config_id(records[i].config_id);
    for (const std::uint8_t subset : tokenizer_subsets()) {
      seen.emplace(base.flag_order_key(), subset);
    }
  }
  // the subset component of the key must follow canonical name order
  std::vector<std::pair<std::string, Configuration>> expanded;
  for (const auto& [key, subset] : seen) {
    Configuration cfg;
    for (int i = 0; i < kNumFlags; ++i) {
      if (key >> (kNumFlags - 1 - i) & 1) cfg.set(static_cast<Flag>(i));
    }
    cfg.tokenizers = subset;
    expanded.emplace_back(cfg.id(), cfg);
  }
  std::sort(expanded.begin(), expanded.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Configuration> out;
  out.reserve(expanded.size());
  for (auto& [id, cfg] : expanded) out.push_back(cfg);
  return out;
}

}  // namespace textsweep

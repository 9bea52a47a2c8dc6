#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "textsweep/corpus.hpp"
#include "textsweep/evaluation.hpp"
#include "textsweep/lexicon.hpp"
#include "textsweep/sweep.hpp"
#include "textsweep/textnorm.hpp"
#include "textsweep/tokenizers.hpp"
#include "textsweep/vectorizer.hpp"

#ifndef TEXTSWEEP_DATA_DIR
#define TEXTSWEEP_DATA_DIR "data"
#endif

namespace {

using namespace textsweep;

struct Resources {
  LexiconSet lex;
  LemmaMap lemmas;
};

Resources load_resources(const std::string& dir) {
  return {load_lexicon_dir(dir), load_lemmas_dir(dir)};
}

std::vector<std::size_t> parse_ks(const std::string& spec) {
  std::vector<std::size_t> ks;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string item =
        spec.substr(pos, comma == std::string::npos ? spec.size() - pos : comma - pos);
    if (!item.empty()) ks.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (ks.empty()) throw std::invalid_argument("empty k list");
  return ks;
}

int cmd_transform(const std::string& flags, const std::string& lexicons) {
  const Resources res = load_resources(lexicons);
  const Configuration cfg = parse_config_fragment(flags);
  std::string line;
  while (std::getline(std::cin, line)) {
    std::cout << normalize(line, cfg, res.lex, &res.lemmas) << '\n';
  }
  return 0;
}

int cmd_tokenize(const std::string& tokenizers) {
  Configuration cfg;
  cfg.tokenizers = parse_tokenizer_set(tokenizers);
  std::string line;
  while (std::getline(std::cin, line)) {
    const TokenBag bag = tokenize_multi(line, cfg);
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [token, count] : bag.counts) j[token] = count;
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_train(const std::string& corpus_path, const std::string& flags,
              const std::string& lexicons, const std::string& out_path,
              const std::string& vocab_out, std::uint64_t seed, int epochs) {
  const Resources res = load_resources(lexicons);
  Configuration cfg = parse_config_fragment(flags);
  if (cfg.tokenizers == 0) cfg.add(Tokenizer::w1);
  const auto docs = load_corpus(corpus_path);

  std::vector<TokenBag> bags;
  std::vector<Label> labels;
  for (const auto& doc : docs) {
    bags.push_back(document_bag(doc.text, cfg, res.lex, &res.lemmas));
    labels.push_back(doc.label);
  }
  const Vocabulary vocab = build_vocabulary(bags);
  std::vector<SparseVector> vecs;
  for (const auto& bag : bags) vecs.push_back(vectorize(bag, vocab, cfg.test(Flag::tfidf)));

  TrainParams params;
  params.seed = seed;
  params.epochs = epochs;
  const LinearModel model = train(vecs, labels, vocab.size(), params);

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write model file: " + out_path);
  nlohmann::json j = model_to_json(model);
  j["config"] = cfg.id();
  out << j.dump() << '\n';
  if (!vocab_out.empty()) {
    std::ofstream vout(vocab_out);
    if (!vout) throw std::runtime_error("cannot write vocabulary file: " + vocab_out);
    vout << vocabulary_to_tsv(vocab);
  }
  std::cout << "trained on " << docs.size() << " documents, vocabulary "
            << vocab.size() << ", model written to " << out_path << '\n';
  return 0;
}

int cmd_eval(const std::string& corpus_path, const std::string& flags,
             const std::string& lexicons, int folds, std::uint64_t seed) {
  const Resources res = load_resources(lexicons);
  Configuration cfg = parse_config_fragment(flags);
  if (cfg.tokenizers == 0) cfg.add(Tokenizer::w1);
  const auto docs = load_corpus(corpus_path);
  const EvalResult result = cross_validate(docs, cfg, res.lex, &res.lemmas, folds, seed);
  std::cout << result.to_json().dump() << '\n';
  return 0;
}

int cmd_sweep(const std::string& corpus_path, const std::string& space,
              const std::string& configs_path, const std::string& gold_path,
              const std::string& lexicons, const std::string& out_path, int workers,
              bool resume, const std::string& split, int folds, std::uint64_t seed) {
  const Resources res = load_resources(lexicons);
  const auto corpus = load_corpus(corpus_path);

  std::vector<Configuration> configs;
  if (space == "single") {
    configs = enumerate_space(SpaceMode::single);
  } else if (space == "combos") {
    configs = enumerate_space(SpaceMode::combos);
  } else if (space == "fast") {
    configs = fast_preset(false);
  } else if (space == "fast16") {
    configs = fast_preset(true);
  } else if (space == "list") {
    if (configs_path.empty())
      throw CLI::ValidationError("--space list requires --configs");
    std::ifstream in(configs_path);
    if (!in) throw std::runtime_error("cannot open configs file: " + configs_path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) configs.push_back(parse_config_id(line));
    }
  } else {
    throw CLI::ValidationError("unknown space: " + space);
  }

  std::optional<std::vector<Document>> gold;
  if (!gold_path.empty()) gold = load_corpus(gold_path);

  SweepOptions options;
  options.workers = workers;
  options.resume = resume;
  options.split = split == "cv" ? "train-cv" : split;
  options.folds = folds;
  options.seed = seed;
  const SweepSummary summary = run_sweep(corpus, gold ? &*gold : nullptr, configs,
                                         res.lex, &res.lemmas, out_path, options);
  std::cout << "evaluated=" << summary.evaluated << " skipped=" << summary.skipped;
  if (summary.best) {
    std::cout << " best=" << summary.best->config_id
              << " accuracy=" << summary.best->accuracy
              << " macro_f1=" << summary.best->macro_f1;
  }
  std::cout << '\n';
  return 0;
}

int cmd_topk(const std::string& results_path, const std::string& ks_spec) {
  const auto records = load_records(results_path);
  if (records.empty()) throw std::runtime_error("results file has no records");
  const auto ks = ks_spec.empty() ? default_topk_ks() : parse_ks(ks_spec);
  std::cout << topk_to_tsv(topk(records, ks));
  return 0;
}

int cmd_expand(const std::string& results_path, std::size_t top) {
  const auto records = load_records(results_path);
  if (records.empty()) throw std::runtime_error("results file has no records");
  for (const auto& cfg : expand_combinations(records, top)) {
    std::cout << cfg.id() << '\n';
  }
  return 0;
}

int cmd_heaps(const std::string& corpus_path, std::size_t interval,
              const std::string& points_path) {
  const auto docs = load_corpus(corpus_path);
  std::vector<std::string> texts;
  texts.reserve(docs.size());
  for (const auto& doc : docs) texts.push_back(doc.text);
  const HeapsFit fit = heaps_fit(texts, interval);
  if (!points_path.empty()) {
    std::ofstream out(points_path);
    if (!out) throw std::runtime_error("cannot write points file: " + points_path);
    out << "n\tvocabulary\n";
    for (const auto& [n, v] : fit.points) out << n << '\t' << v << '\n';
  }
  nlohmann::json j;
  j["alpha"] = fit.alpha;
  j["log_k"] = fit.log_k;
  j["points"] = fit.points.size();
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_gen(std::size_t docs, std::uint64_t seed, std::size_t vocab, double zipf,
            double misspell, std::size_t min_tokens, std::size_t max_tokens,
            const std::string& out_path) {
  SyntheticParams params;
  params.n_docs = docs;
  params.seed = seed;
  params.vocab_size = vocab;
  params.zipf_s = zipf;
  params.misspell_prob = misspell;
  params.min_tokens = min_tokens;
  params.max_tokens = max_tokens;
  const auto corpus = gen_synthetic(params);
  if (out_path.empty()) {
    for (const auto& doc : corpus) {
      std::cout << doc.id << '\t' << label_name(doc.label) << '\t'
                << escape_text(doc.text) << '\n';
    }
  } else {
    save_corpus(corpus, out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"text transformation, tokenization and configuration-sweep toolkit"};
  app.require_subcommand(1);

  std::string flags, lexicons = TEXTSWEEP_DATA_DIR;
  std::string corpus_path, out_path, results_path, gold_path, configs_path;
  std::string tokenizers = "w1", space = "fast", split = "cv", ks_spec, vocab_out;
  std::string points_path;
  std::uint64_t seed = 42;
  int folds = 5, workers = 1, epochs = 10;
  std::size_t top = 32, interval = 1000, docs = 400, vocab = 5000;
  std::size_t min_tokens = 8, max_tokens = 16;
  double zipf = 1.0, misspell = 0.0;

  auto* transform = app.add_subcommand("transform", "normalize text lines from stdin");
  transform->add_option("--flags", flags, "flag fragment, e.g. stem=1,del_diac=1");
  transform->add_option("--lexicons", lexicons, "lexicon directory");

  auto* tokenize = app.add_subcommand("tokenize", "tokenize text lines from stdin");
  tokenize->add_option("--tokenizers", tokenizers, "tokenizer set, e.g. w1+q3");

  auto* train_cmd = app.add_subcommand("train", "train a model on a corpus");
  train_cmd->add_option("--corpus", corpus_path, "corpus TSV")->required();
  train_cmd->add_option("--config,--flags", flags, "configuration id or fragment (tokenizers default to w1)");
  train_cmd->add_option("--out", out_path, "model JSON output")->required();
  train_cmd->add_option("--vocab-out", vocab_out, "vocabulary TSV output");
  train_cmd->add_option("--lexicons", lexicons, "lexicon directory");
  train_cmd->add_option("--seed", seed, "random seed");
  train_cmd->add_option("--epochs", epochs, "training epochs");

  auto* eval_cmd = app.add_subcommand("eval", "cross-validate one configuration");
  eval_cmd->add_option("--corpus", corpus_path, "corpus TSV")->required();
  eval_cmd->add_option("--config,--flags", flags, "configuration id or fragment (tokenizers default to w1)");
  eval_cmd->add_option("--folds", folds, "number of folds");
  eval_cmd->add_option("--seed", seed, "random seed");
  eval_cmd->add_option("--lexicons", lexicons, "lexicon directory");

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a configuration space");
  sweep_cmd->add_option("--corpus", corpus_path, "training corpus TSV")->required();
  sweep_cmd->add_option("--space", space, "single|combos|fast|fast16|list");
  sweep_cmd->add_option("--configs", configs_path, "config-id file for --space list");
  sweep_cmd->add_option("--workers", workers, "worker threads");
  sweep_cmd->add_option("--out", out_path, "results JSONL file")->required();
  sweep_cmd->add_flag("--resume", "skip configurations already in the results file");
  sweep_cmd->add_option("--split", split, "cv|gold");
  sweep_cmd->add_option("--gold", gold_path, "gold corpus TSV (for --split gold)");
  sweep_cmd->add_option("--folds", folds, "folds for the cv split");
  sweep_cmd->add_option("--seed", seed, "random seed");
  sweep_cmd->add_option("--lexicons", lexicons, "lexicon directory");

  auto* topk_cmd = app.add_subcommand("topk", "composition table of the best records");
  topk_cmd->add_option("--results", results_path, "results JSONL file")->required();
  topk_cmd->add_option("--k", ks_spec, "comma-separated k list (default 1,2,...,512)");

  auto* expand_cmd = app.add_subcommand("expand", "cross top flag assignments with all tokenizer subsets");
  expand_cmd->add_option("--results", results_path, "results JSONL file")->required();
  expand_cmd->add_option("--top", top, "number of best records to expand");

  auto* heaps_cmd = app.add_subcommand("heaps", "vocabulary-growth fit over a corpus");
  heaps_cmd->add_option("--corpus", corpus_path, "corpus TSV")->required();
  heaps_cmd->add_option("--interval", interval, "tokens between samples");
  heaps_cmd->add_option("--points", points_path, "write (n, V) points TSV here");

  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic corpus");
  gen_cmd->add_option("--docs", docs, "number of documents");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--vocab", vocab, "background vocabulary size");
  gen_cmd->add_option("--zipf", zipf, "Zipf exponent");
  gen_cmd->add_option("--misspell", misspell, "per-token misspelling probability");
  gen_cmd->add_option("--min-tokens", min_tokens, "minimum tokens per document");
  gen_cmd->add_option("--max-tokens", max_tokens, "maximum tokens per document");
  gen_cmd->add_option("--out", out_path, "output TSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(transform)) return cmd_transform(flags, lexicons);
    if (app.got_subcommand(tokenize)) return cmd_tokenize(tokenizers);
    if (app.got_subcommand(train_cmd))
      return cmd_train(corpus_path, flags, lexicons, out_path, vocab_out, seed, epochs);
    if (app.got_subcommand(eval_cmd))
      return cmd_eval(corpus_path, flags, lexicons, folds, seed);
    if (app.got_subcommand(sweep_cmd))
      return cmd_sweep(corpus_path, space, configs_path, gold_path, lexicons, out_path,
                       workers, sweep_cmd->count("--resume") > 0, split, folds, seed);
    if (app.got_subcommand(topk_cmd)) return cmd_topk(results_path, ks_spec);
    if (app.got_subcommand(expand_cmd)) return cmd_expand(results_path, top);
    if (app.got_subcommand(heaps_cmd)) return cmd_heaps(corpus_path, interval, points_path);
    if (app.got_subcommand(gen_cmd))
      return cmd_gen(docs, seed, vocab, zipf, misspell, min_tokens, max_tokens, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

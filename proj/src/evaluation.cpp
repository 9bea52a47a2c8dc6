#include "textsweep/evaluation.hpp"

#include <stdexcept>

#include "textsweep/rng.hpp"
#include "textsweep/vectorizer.hpp"

namespace textsweep {
namespace {

void fill_scores(EvalResult& r) {
  std::uint64_t total = 0, correct = 0;
  for (int g = 0; g < kNumLabels; ++g) {
    for (int p = 0; p < kNumLabels; ++p) {
      total += r.confusion[g][p];
      if (g == p) correct += r.confusion[g][p];
    }
  }
  r.accuracy = total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  double f1_sum = 0.0;
  for (int c = 0; c < kNumLabels; ++c) {
    std::uint64_t tp = r.confusion[c][c], fp = 0, fn = 0;
    for (int o = 0; o < kNumLabels; ++o) {
      if (o == c) continue;
      fp += r.confusion[o][c];
      fn += r.confusion[c][o];
    }
    const std::uint64_t denom = 2 * tp + fp + fn;
    if (denom > 0) f1_sum += 2.0 * static_cast<double>(tp) / static_cast<double>(denom);
  }
  r.macro_f1 = f1_sum / kNumLabels;
}

}  // namespace

std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<Label>& labels,
                                                       int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (static_cast<std::size_t>(k) > labels.size())
    throw std::invalid_argument("k exceeds number of documents");
  std::array<std::vector<std::size_t>, kNumLabels> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    by_class[static_cast<int>(labels[i])].push_back(i);
  }
  Rng rng(seed);
  std::vector<std::vector<std::size_t>> folds(k);
  // The fold cursor rolls across classes so overall fold sizes stay within
  // one of each other, on top of the per-class balance.
  std::size_t cursor = 0;
  for (int c = 0; c < kNumLabels; ++c) {
    auto& members = by_class[c];
    if (members.empty()) continue;
    rng.shuffle(members);
    for (const std::size_t idx : members) {
      folds[cursor % k].push_back(idx);
      ++cursor;
    }
  }
  return folds;
}

double accuracy(const std::vector<Label>& gold, const std::vector<Label>& pred) {
  if (gold.size() != pred.size()) throw std::invalid_argument("gold/pred length mismatch");
  if (gold.empty()) throw std::invalid_argument("empty label lists");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

double macro_f1(const std::vector<Label>& gold, const std::vector<Label>& pred) {
  if (gold.size() != pred.size()) throw std::invalid_argument("gold/pred length mismatch");
  if (gold.empty()) throw std::invalid_argument("empty label lists");
  EvalResult r;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++r.confusion[static_cast<int>(gold[i])][static_cast<int>(pred[i])];
  }
  fill_scores(r);
  return r.macro_f1;
}

nlohmann::json EvalResult::to_json() const {
  nlohmann::json j;
  j["accuracy"] = accuracy;
  j["macro_f1"] = macro_f1;
  std::vector<std::vector<std::uint64_t>> conf;
  for (const auto& row : confusion) conf.emplace_back(row.begin(), row.end());
  j["confusion"] = conf;
  nlohmann::json folds = nlohmann::json::array();
  for (const auto& [acc, f1] : per_fold) folds.push_back({acc, f1});
  j["per_fold"] = folds;
  return j;
}

TokenBag document_bag(const std::string& text, const Configuration& cfg,
                      const LexiconSet& lex, const LemmaMap* lemmas) {
  return tokenize_multi(normalize(text, cfg, lex, lemmas), cfg);
}

EvalResult cross_validate(const std::vector<Document>& corpus, const Configuration& cfg,
                          const LexiconSet& lex, const LemmaMap* lemmas, int k,
                          std::uint64_t seed, const TrainParams& params) {
  std::vector<Label> labels;
  labels.reserve(corpus.size());
  for (const auto& doc : corpus) labels.push_back(doc.label);

  // normalization does not depend on the split, so bags are built once
  std::vector<TokenBag> bags;
  bags.reserve(corpus.size());
  for (const auto& doc : corpus) bags.push_back(document_bag(doc.text, cfg, lex, lemmas));

  const auto folds = stratified_folds(labels, k, seed);
  EvalResult result;
  TrainParams fold_params = params;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    fold_params.seed = Rng::mix(seed, f + 1);
    std::vector<bool> held(corpus.size(), false);
    for (const std::size_t idx : folds[f]) held[idx] = true;

    std::vector<TokenBag> train_bags;
    std::vector<Label> train_labels;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!held[i]) {
        train_bags.push_back(bags[i]);
        train_labels.push_back(labels[i]);
      }
    }
    const Vocabulary vocab = build_vocabulary(train_bags);
    std::vector<SparseVector> train_vecs;
    train_vecs.reserve(train_bags.size());
    for (const auto& bag : train_bags) {
      train_vecs.push_back(vectorize(bag, vocab, cfg.test(Flag::tfidf)));
    }
    const LinearModel model = train(train_vecs, train_labels, vocab.size(), fold_params);

    EvalResult fold_result;
    for (const std::size_t idx : folds[f]) {
      const Label guess = predict(model, vectorize(bags[idx], vocab, cfg.test(Flag::tfidf)));
      ++result.confusion[static_cast<int>(labels[idx])][static_cast<int>(guess)];
      ++fold_result.confusion[static_cast<int>(labels[idx])][static_cast<int>(guess)];
    }
    fill_scores(fold_result);
    result.per_fold.emplace_back(fold_result.accuracy, fold_result.macro_f1);
  }
  fill_scores(result);
  return result;
}

EvalResult evaluate_gold(const std::vector<Document>& train_docs,
                         const std::vector<Document>& gold, const Configuration& cfg,
                         const LexiconSet& lex, const LemmaMap* lemmas,
                         const TrainParams& params) {
  std::vector<TokenBag> train_bags;
  std::vector<Label> train_labels;
  train_bags.reserve(train_docs.size());
  for (const auto& doc : train_docs) {
    train_bags.push_back(document_bag(doc.text, cfg, lex, lemmas));
    train_labels.push_back(doc.label);
  }
  const Vocabulary vocab = build_vocabulary(train_bags);
  std::vector<SparseVector> train_vecs;
  train_vecs.reserve(train_bags.size());
  for (const auto& bag : train_bags) {
    train_vecs.push_back(vectorize(bag, vocab, cfg.test(Flag::tfidf)));
  }
  const LinearModel model = train(train_vecs, train_labels, vocab.size(), params);

  EvalResult result;
  for (const auto& doc : gold) {
    const TokenBag bag = document_bag(doc.text, cfg, lex, lemmas);
    const Label guess = predict(model, vectorize(bag, vocab, cfg.test(Flag::tfidf)));
    ++result.confusion[static_cast<int>(doc.label)][static_cast<int>(guess)];
  }
  fill_scores(result);
  result.per_fold.emplace_back(result.accuracy, result.macro_f1);
  return result;
}

}  // namespace textsweep

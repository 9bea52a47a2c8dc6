#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "textsweep/classifier.hpp"
#include "textsweep/corpus.hpp"
#include "textsweep/lexicon.hpp"
#include "textsweep/textnorm.hpp"
#include "textsweep/tokenizers.hpp"

namespace textsweep {

// Seeded stratified partition into k folds. Per-class counts across folds
// differ by at most one; classes smaller than k are dealt round-robin.
// Throws when k < 2 or k exceeds the number of documents.
std::vector<std::vector<std::size_t>> stratified_folds(const std::vector<Label>& labels,
                                                       int k, std::uint64_t seed);

double accuracy(const std::vector<Label>& gold, const std::vector<Label>& pred);

// Unweighted mean of per-class F1 over the fixed 4-class set; a class with
// an empty precision+recall denominator contributes 0.
double macro_f1(const std::vector<Label>& gold, const std::vector<Label>& pred);

struct EvalResult {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::array<std::array<std::uint64_t, kNumLabels>, kNumLabels> confusion{};  // [gold][pred]
  std::vector<std::pair<double, double>> per_fold;  // (accuracy, macro_f1)

  nlohmann::json to_json() const;
};

// Full pipeline for one document under one configuration.
TokenBag document_bag(const std::string& text, const Configuration& cfg,
                      const LexiconSet& lex, const LemmaMap* lemmas);

// k-fold cross validation: per fold, the vocabulary and model are built on
// the other folds only. Reported scores come from the pooled confusion
// matrix; per-fold scores are kept alongside.
EvalResult cross_validate(const std::vector<Document>& corpus, const Configuration& cfg,
                          const LexiconSet& lex, const LemmaMap* lemmas, int k = 5,
                          std::uint64_t seed = 42, const TrainParams& params = {});

// Train on `train`, evaluate on `gold`.
EvalResult evaluate_gold(const std::vector<Document>& train,
                         const std::vector<Document>& gold, const Configuration& cfg,
                         const LexiconSet& lex, const LemmaMap* lemmas,
                         const TrainParams& params = {});

}  // namespace textsweep

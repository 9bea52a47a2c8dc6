#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "textsweep/classifier.hpp"

namespace textsweep {

struct Document {
  std::string id;
  Label label = Label::none;
  std::string text;
};

// Corpus files are TSV: id<TAB>label<TAB>text, UTF-8, LF line endings.
// Tabs, newlines and backslashes inside the text are escaped as \t, \n, \\.
// Malformed lines and unknown labels raise std::runtime_error naming the
// line number. Loading then saving a well-formed file is byte-identical.
std::vector<Document> load_corpus(const std::string& path);
void save_corpus(const std::vector<Document>& docs, const std::string& path);

std::string escape_text(std::string_view text);
std::string unescape_text(std::string_view text);

// Seeded stratified split; classes with fewer than 2 members go to train.
std::pair<std::vector<Document>, std::vector<Document>> split_train_test(
    const std::vector<Document>& corpus, double train_fraction = 0.10,
    std::uint64_t seed = 42);

// Least-squares fit of log V = log_k + alpha * log n over vocabulary-growth
// samples taken every `sample_interval` tokens. Texts are lightly normalized
// first (URLs removed, lowercased) and tokenized on whitespace.
struct HeapsFit {
  double alpha = 0.0;
  double log_k = 0.0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> points;  // (tokens, vocab)
};

// Throws std::runtime_error when fewer than 2 points are available or when
// the fitted exponent is not positive (degenerate vocabulary curve).
HeapsFit heaps_fit(const std::vector<std::string>& texts, std::size_t sample_interval);

// Synthetic, linearly separable corpus: every document carries its class
// keyword plus Zipf-distributed background tokens. misspell_prob mutates
// individual tokens (duplicate/drop/substitute one character) to emulate the
// noisy vocabulary growth of informal text.
struct SyntheticParams {
  std::size_t n_docs = 400;
  std::size_t vocab_size = 5000;
  double zipf_s = 1.0;
  std::uint64_t seed = 42;
  double misspell_prob = 0.0;
  std::size_t min_tokens = 8;
  std::size_t max_tokens = 16;
};

// One keyword per class, indexed by Label order.
using ClassKeywords = std::array<std::string, kNumLabels>;
ClassKeywords default_class_keywords();

std::vector<Document> gen_synthetic(const SyntheticParams& params,
                                    const ClassKeywords& keywords = default_class_keywords());

}  // namespace textsweep

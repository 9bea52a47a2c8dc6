#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "textsweep/tokenizers.hpp"

namespace textsweep {

// Token -> column mapping with document frequencies, built on training bags
// only. Column ids follow lexicographic token order, so equal corpora always
// produce identical vocabularies.
struct Vocabulary {
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::uint32_t> df;  // indexed by column id
  std::uint32_t n_docs = 0;

  std::size_t size() const { return index.size(); }
};

// Throws std::runtime_error("empty vocabulary") when every bag is empty.
Vocabulary build_vocabulary(const std::vector<TokenBag>& bags);

// Max-normalized term frequency: count / max count in the bag.
std::unordered_map<std::string, double> term_frequency(const TokenBag& bag);

// ln(n_docs / df). Throws std::runtime_error("out-of-vocabulary") for
// unknown tokens.
double idf(const Vocabulary& vocab, const std::string& token);

// One vectorized document: (column, weight) pairs with strictly increasing
// columns and no stored zeros.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;
};

// TF weights, or TF*IDF when use_tfidf is set. Unknown tokens are dropped;
// zero weights (tokens present in every document under TF*IDF) are not
// stored.
SparseVector vectorize(const TokenBag& bag, const Vocabulary& vocab, bool use_tfidf);

// "token<TAB>column<TAB>df" lines in column order.
std::string vocabulary_to_tsv(const Vocabulary& vocab);

}  // namespace textsweep

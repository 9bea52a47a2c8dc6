#include "textsweep/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace textsweep {

Vocabulary build_vocabulary(const std::vector<TokenBag>& bags) {
  std::unordered_map<std::string, std::uint32_t> df_by_token;
  for (const auto& bag : bags) {
    for (const auto& [token, count] : bag.counts) ++df_by_token[token];
  }
  if (df_by_token.empty()) throw std::runtime_error("empty vocabulary");

  std::vector<const std::string*> tokens;
  tokens.reserve(df_by_token.size());
  for (const auto& [token, df] : df_by_token) tokens.push_back(&token);
  std::sort(tokens.begin(), tokens.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });

  Vocabulary vocab;
  vocab.n_docs = static_cast<std::uint32_t>(bags.size());
  vocab.df.resize(tokens.size());
  vocab.index.reserve(tokens.size());
  for (std::uint32_t col = 0; col < tokens.size(); ++col) {
    vocab.index.emplace(*tokens[col], col);
    vocab.df[col] = df_by_token.at(*tokens[col]);
  }
  return vocab;
}

std::unordered_map<std::string, double> term_frequency(const TokenBag& bag) {
  std::unordered_map<std::string, double> tf;
  if (bag.counts.empty()) return tf;
  std::uint32_t max_count = 0;
  for (const auto& [token, count] : bag.counts) max_count = std::max(max_count, count);
  tf.reserve(bag.counts.size());
  for (const auto& [token, count] : bag.counts) {
    tf.emplace(token, static_cast<double>(count) / max_count);
  }
  return tf;
}

double idf(const Vocabulary& vocab, const std::string& token) {
  const auto it = vocab.index.find(token);
  if (it == vocab.index.end()) throw std::runtime_error("out-of-vocabulary");
  return std::log(static_cast<double>(vocab.n_docs) /
                  static_cast<double>(vocab.df[it->second]));
}

SparseVector vectorize(const TokenBag& bag, const Vocabulary& vocab, bool use_tfidf) {
  SparseVector v;
  if (bag.counts.empty()) return v;
  std::uint32_t max_count = 0;
  for (const auto& [token, count] : bag.counts) max_count = std::max(max_count, count);
  v.entries.reserve(bag.counts.size());
  for (const auto& [token, count] : bag.counts) {
    const auto it = vocab.index.find(token);
    if (it == vocab.index.end()) continue;
    double weight = static_cast<double>(count) / max_count;
    if (use_tfidf) {
      weight *= std::log(static_cast<double>(vocab.n_docs) /
                         static_cast<double>(vocab.df[it->second]));
    }
    if (weight != 0.0) v.entries.emplace_back(it->second, weight);
  }
  std::sort(v.entries.begin(), v.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::string vocabulary_to_tsv(const Vocabulary& vocab) {
  std::vector<const std::string*> by_col(vocab.size());
  for (const auto& [token, col] : vocab.index) by_col[col] = &token;
  std::string out;
  for (std::uint32_t col = 0; col < by_col.size(); ++col) {
    out += *by_col[col];
    out.push_back('\t');
    out += std::to_string(col);
    out.push_back('\t');
    out += std::to_string(vocab.df[col]);
    out.push_back('\n');
  }
  return out;
}

}  // namespace textsweep

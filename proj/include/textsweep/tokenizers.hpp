#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "textsweep/config.hpp"

namespace textsweep {

// Multiset of tokens produced by tokenizing one document.
struct TokenBag {
  std::unordered_map<std::string, std::uint32_t> counts;

  void add(const std::string& token, std::uint32_t n = 1) { counts[token] += n; }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [tok, c] : counts) t += c;
    return t;
  }
  bool empty() const { return counts.empty(); }
};

// Word n-grams: whitespace tokens joined by single spaces. n must be 1 or 2;
// a text of m words yields max(0, m-n+1) grams.
TokenBag tokenize_words(std::string_view text, int n);

// Character q-grams over the text with spaces replaced by '_'. q must be in
// [3,7]; a text of m characters yields max(0, m-q+1) grams. Operates on code
// points, not bytes.
TokenBag tokenize_qgrams(std::string_view text, int q);

// Union of several tokenizers; every token is prefixed with its tokenizer
// tag ("w1:", "q3:", ...) so identical surface strings from different
// tokenizers stay distinct in the vocabulary.
TokenBag tokenize_multi(std::string_view text, const std::vector<Tokenizer>& tokenizers);
TokenBag tokenize_multi(std::string_view text, const Configuration& cfg);

// Jaccard coefficient over the distinct-token sets; 1 when both are empty.
double jaccard(const TokenBag& a, const TokenBag& b);

}  // namespace textsweep

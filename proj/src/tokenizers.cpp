#include "textsweep/tokenizers.hpp"

#include <stdexcept>

#include "textsweep/utf8.hpp"

namespace textsweep {

TokenBag tokenize_words(std::string_view text, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("n-words requires n in {1,2}");
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) words.emplace_back(text.substr(i, j - i));
    i = j;
  }
  TokenBag bag;
  if (words.size() < static_cast<std::size_t>(n)) return bag;
  for (std::size_t k = 0; k + n <= words.size(); ++k) {
    std::string gram = words[k];
    for (int d = 1; d < n; ++d) {
      gram.push_back(' ');
      gram += words[k + d];
    }
    bag.add(gram);
  }
  return bag;
}

TokenBag tokenize_qgrams(std::string_view text, int q) {
  if (q < 3 || q > 7) throw std::invalid_argument("q-grams require q in {3..7}");
  std::u32string cps = utf8::decode(text);
  for (auto& cp : cps) {
    if (cp == U' ') cp = U'_';
  }
  TokenBag bag;
  if (cps.size() < static_cast<std::size_t>(q)) return bag;
  for (std::size_t i = 0; i + q <= cps.size(); ++i) {
    bag.add(utf8::encode(cps.substr(i, q)));
  }
  return bag;
}

TokenBag tokenize_multi(std::string_view text, const std::vector<Tokenizer>& tokenizers) {
  if (tokenizers.empty()) throw std::invalid_argument("empty tokenizer set");
  TokenBag merged;
  for (Tokenizer t : tokenizers) {
    TokenBag part;
    switch (t) {
      case Tokenizer::w1: part = tokenize_words(text, 1); break;
      case Tokenizer::w2: part = tokenize_words(text, 2); break;
      default: part = tokenize_qgrams(text, 3 + static_cast<int>(t) - static_cast<int>(Tokenizer::q3));
    }
    const std::string prefix = std::string(tokenizer_name(t)) + ":";
    for (const auto& [token, count] : part.counts) merged.add(prefix + token, count);
  }
  return merged;
}

TokenBag tokenize_multi(std::string_view text, const Configuration& cfg) {
  return tokenize_multi(text, cfg.tokenizer_list());
}

double jaccard(const TokenBag& a, const TokenBag& b) {
  if (a.counts.empty() && b.counts.empty()) return 1.0;
  std::size_t intersection = 0;
  for (const auto& [token, count] : a.counts) {
    if (b.counts.count(token) > 0) ++intersection;
  }
  const std::size_t unions = a.counts.size() + b.counts.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(unions);
}

}  // namespace textsweep

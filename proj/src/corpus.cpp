#include "textsweep/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include "textsweep/rng.hpp"
#include "textsweep/utf8.hpp"

namespace textsweep {

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '\\' || i + 1 >= text.size()) {
      out.push_back(text[i]);
      continue;
    }
    switch (text[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case '\\': out.push_back('\\'); break;
      default:
        out.push_back('\\');
        out.push_back(text[i]);
    }
  }
  return out;
}

std::vector<Document> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<Document> docs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = t1 == std::string::npos ? std::string::npos
                                                   : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos || t1 == 0) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected id<TAB>label<TAB>text");
    }
    const std::string label_str = line.substr(t1 + 1, t2 - t1 - 1);
    const auto label = label_from_name(label_str);
    if (!label) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown label '" + label_str + "'");
    }
    docs.push_back({line.substr(0, t1), *label, unescape_text(line.substr(t2 + 1))});
  }
  return docs;
}

void save_corpus(const std::vector<Document>& docs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write corpus file: " + path);
  for (const auto& doc : docs) {
    out << doc.id << '\t' << label_name(doc.label) << '\t' << escape_text(doc.text)
        << '\n';
  }
}

std::pair<std::vector<Document>, std::vector<Document>> split_train_test(
    const std::vector<Document>& corpus, double train_fraction, std::uint64_t seed) {
  if (train_fraction <= 0.0 || train_fraction >= 1.0)
    throw std::invalid_argument("train_fraction must be in (0,1)");
  std::array<std::vector<std::size_t>, kNumLabels> by_class;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    by_class[static_cast<int>(corpus[i].label)].push_back(i);
  }
  // Per-class quota by largest remainder, so the global train size equals
  // round(fraction * total) whenever every class has >= 2 members.
  const auto global_target = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(corpus.size())));
  std::array<std::size_t, kNumLabels> quota{};
  std::vector<std::pair<double, int>> remainders;
  std::size_t assigned = 0;
  for (int c = 0; c < kNumLabels; ++c) {
    if (by_class[c].empty()) continue;
    const double exact = train_fraction * static_cast<double>(by_class[c].size());
    quota[c] = static_cast<std::size_t>(exact);
    assigned += quota[c];
    remainders.emplace_back(exact - static_cast<double>(quota[c]), c);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [rem, c] : remainders) {
    if (assigned >= global_target) break;
    if (quota[c] < by_class[c].size()) {
      ++quota[c];
      ++assigned;
    }
  }

  std::vector<bool> in_train(corpus.size(), false);
  Rng rng(seed);
  for (int c = 0; c < kNumLabels; ++c) {
    auto& members = by_class[c];
    if (members.empty()) continue;
    if (members.size() < 2) {
      std::cerr << "warning: class '" << label_name(static_cast<Label>(c))
                << "' has fewer than 2 members; placed in train\n";
      in_train[members.front()] = true;
      continue;
    }
    rng.shuffle(members);
    for (std::size_t i = 0; i < std::max<std::size_t>(quota[c], 1); ++i) {
      in_train[members[i]] = true;
    }
  }
  std::vector<Document> train, test;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    (in_train[i] ? train : test).push_back(corpus[i]);
  }
  return {std::move(train), std::move(test)};
}

HeapsFit heaps_fit(const std::vector<std::string>& texts, std::size_t sample_interval) {
  if (sample_interval == 0) throw std::invalid_argument("sample_interval must be > 0");
  HeapsFit fit;
  std::unordered_set<std::string> vocab;
  std::uint64_t tokens_seen = 0;
  for (const auto& text : texts) {
    // light normalization: drop URLs, lowercase, split on whitespace
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) break;
      const std::string_view raw(text.data() + i, j - i);
      i = j;
      if (raw.starts_with("http://") || raw.starts_with("https://") ||
          raw.starts_with("www.")) {
        continue;
      }
      vocab.insert(utf8::lower(raw));
      ++tokens_seen;
      if (tokens_seen % sample_interval == 0) {
        fit.points.emplace_back(tokens_seen, vocab.size());
      }
    }
  }
  if (fit.points.size() < 2) {
    throw std::runtime_error("heaps fit needs at least 2 sample points");
  }
  double sx = 0.0, sy = 0.0;
  for (const auto& [n, v] : fit.points) {
    sx += std::log(static_cast<double>(n));
    sy += std::log(static_cast<double>(v));
  }
  const double mx = sx / static_cast<double>(fit.points.size());
  const double my = sy / static_cast<double>(fit.points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [n, v] : fit.points) {
    const double dx = std::log(static_cast<double>(n)) - mx;
    const double dy = std::log(static_cast<double>(v)) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  if (sxx == 0.0) throw std::runtime_error("heaps fit is degenerate (constant n)");
  fit.alpha = sxy / sxx;
  fit.log_k = my - fit.alpha * mx;
  if (fit.alpha <= 0.0) {
    throw std::runtime_error("heaps fit rejected: non-positive exponent " +
                             std::to_string(fit.alpha));
  }
  return fit;
}

ClassKeywords default_class_keywords() {
  return {"maravilloso", "intermedio", "desastroso", "irrelevante"};
}

namespace {

// rank -> pronounceable-ish token made of letters only, so the coarsening
// transformations never collapse distinct background tokens
std::string background_word(std::size_t rank) {
  std::string out = "x";
  std::size_t r = rank + 1;
  while (r > 0) {
    out.push_back(static_cast<char>('a' + r % 26));
    r /= 26;
  }
  return out;
}

std::string misspell(const std::string& word, Rng& rng) {
  const auto cps = utf8::decode(word);
  if (cps.size() < 2) return word;
  std::u32string mutated = cps;
  const std::size_t pos = static_cast<std::size_t>(rng.below(cps.size()));
  switch (rng.below(3)) {
    case 0:  // duplicate a character
      mutated.insert(mutated.begin() + pos, cps[pos]);
      break;
    case 1:  // drop a character
      mutated.erase(mutated.begin() + pos);
      break;
    default:  // substitute a random letter
      mutated[pos] = static_cast<char32_t>(U'a' + rng.below(26));
      break;
  }
  return utf8::encode(mutated);
}

}  // namespace

std::vector<Document> gen_synthetic(const SyntheticParams& params,
                                    const ClassKeywords& keywords) {
  if (params.n_docs < 4) throw std::invalid_argument("need at least 4 documents");
  if (params.min_tokens < 1 || params.max_tokens < params.min_tokens)
    throw std::invalid_argument("bad token range");
  Rng rng(params.seed);

  // cumulative Zipf weights for inverse-CDF sampling
  std::vector<double> cdf(params.vocab_size);
  double total = 0.0;
  for (std::size_t r = 0; r < params.vocab_size; ++r) {
    total += 1.0 / std::pow(static_cast<double>(r + 1), params.zipf_s);
    cdf[r] = total;
  }
  const auto sample_rank = [&]() {
    const double u = rng.unit() * total;
    return static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  };

  std::vector<Document> docs;
  docs.reserve(params.n_docs);
  for (std::size_t i = 0; i < params.n_docs; ++i) {
    const Label label = static_cast<Label>(i % kNumLabels);
    const std::size_t len =
        params.min_tokens +
        static_cast<std::size_t>(rng.below(params.max_tokens - params.min_tokens + 1));
    std::vector<std::string> tokens;
    tokens.reserve(len);
    for (std::size_t k = 0; k + 1 < len; ++k) {
      tokens.push_back(background_word(sample_rank()));
    }
    const std::size_t kw_pos = static_cast<std::size_t>(rng.below(tokens.size() + 1));
    tokens.insert(tokens.begin() + kw_pos, keywords[static_cast<int>(label)]);
    if (params.misspell_prob > 0.0) {
      for (auto& token : tokens) {
        if (rng.unit() < params.misspell_prob) token = misspell(token, rng);
      }
    }
    std::string text;
    for (const auto& t : tokens) {
      if (!text.empty()) text.push_back(' ');
      text += t;
    }
    docs.push_back({"d" + std::to_string(i), label, std::move(text)});
  }
  return docs;
}

}  // namespace textsweep

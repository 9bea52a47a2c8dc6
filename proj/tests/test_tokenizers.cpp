#include "doctest.h"
#include "textsweep/tokenizers.hpp"

#include <stdexcept>

#include <set>
#include <string>

#include "textsweep/rng.hpp"
#include "textsweep/utf8.hpp"

using namespace textsweep;

namespace {

// independent window oracle over the space->underscore string
std::multiset<std::string> window_oracle(const std::string& text, int q) {
  std::u32string cps = utf8::decode(text);
  for (auto& c : cps) {
    if (c == U' ') c = U'_';
  }
  std::multiset<std::string> grams;
  for (std::size_t i = 0; i + q <= cps.size(); ++i) {
    grams.insert(utf8::encode(cps.substr(i, q)));
  }
  return grams;
}

std::multiset<std::string> bag_to_multiset(const TokenBag& bag) {
  std::multiset<std::string> out;
  for (const auto& [tok, count] : bag.counts) {
    for (std::uint32_t i = 0; i < count; ++i) out.insert(tok);
  }
  return out;
}

std::string random_string(Rng& rng) {
  static const std::string alphabet = "abcdefgh XYZ.,;:!01 ";
  std::string s;
  const std::size_t len = rng.below(30);
  for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng.below(alphabet.size())]);
  return s;
}

}  // namespace

TEST_CASE("word n-grams") {
  const auto bag = tokenize_words("the lights and shadows of your future", 2);
  const std::multiset<std::string> expected = {"the lights", "lights and",
                                               "and shadows", "shadows of",
                                               "of your",     "your future"};
  CHECK(bag_to_multiset(bag) == expected);
  CHECK(tokenize_words("hola", 1).counts.at("hola") == 1);
  CHECK(tokenize_words("hola", 2).empty());
  CHECK(tokenize_words("", 1).empty());
  CHECK_THROWS_AS(tokenize_words("a b c", 3), std::invalid_argument);
  CHECK_THROWS_AS(tokenize_words("a b c", 0), std::invalid_argument);
}

TEST_CASE("character q-grams") {
  // distinct set must equal the sliding-window oracle over "I_like_vanilla"
  const auto bag = tokenize_qgrams("I like vanilla", 3);
  const std::multiset<std::string> expected = {
      "I_l", "_li", "lik", "ike", "ke_", "e_v", "_va", "van", "ani", "nil", "ill", "lla"};
  CHECK(bag_to_multiset(bag) == expected);
  CHECK(bag_to_multiset(bag) == window_oracle("I like vanilla", 3));

  // 12 chars -> exactly 10 grams, 8 distinct ("abr" and "bra" repeat)
  const auto abra = tokenize_qgrams("abra cadabra", 3);
  CHECK(abra.total() == 10);
  CHECK(abra.counts.size() == 8);
  CHECK(bag_to_multiset(abra) == window_oracle("abra cadabra", 3));

  CHECK(tokenize_qgrams("ab", 3).empty());
  CHECK_THROWS_AS(tokenize_qgrams("abcdef", 2), std::invalid_argument);
  CHECK_THROWS_AS(tokenize_qgrams("abcdef", 8), std::invalid_argument);
}

TEST_CASE("gram count arithmetic on random strings") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::string s = random_string(rng);
    const auto cps = utf8::decode(s).size();
    for (int q = 3; q <= 7; ++q) {
      const auto bag = tokenize_qgrams(s, q);
      const std::int64_t expected =
          std::max<std::int64_t>(0, static_cast<std::int64_t>(cps) - q + 1);
      CHECK(static_cast<std::int64_t>(bag.total()) == expected);
    }
    std::size_t words = 0;
    bool in_word = false;
    for (char c : s) {
      if (c == ' ') in_word = false;
      else if (!in_word) { in_word = true; ++words; }
    }
    for (int n = 1; n <= 2; ++n) {
      const std::int64_t expected =
          std::max<std::int64_t>(0, static_cast<std::int64_t>(words) - n + 1);
      CHECK(static_cast<std::int64_t>(tokenize_words(s, n).total()) == expected);
    }
  }
}

TEST_CASE("multi-tokenizer union with tag prefixes") {
  auto bag = tokenize_multi("ab cd", {Tokenizer::w1});
  CHECK(bag.counts.size() == 2);
  CHECK(bag.counts.at("w1:ab") == 1);
  CHECK(bag.counts.at("w1:cd") == 1);

  // w1 gives 2 tokens, q3 over "hola_mundo" gives 10-3+1 = 8
  CHECK(tokenize_multi("hola mundo", {Tokenizer::w1, Tokenizer::q3}).total() == 2 + 8);

  CHECK_THROWS_AS(tokenize_multi("x", std::vector<Tokenizer>{}), std::invalid_argument);

  // singleton multi equals the prefix-wrapped plain tokenizer
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const std::string s = random_string(rng);
    const auto multi = tokenize_multi(s, {Tokenizer::q5});
    const auto plain = tokenize_qgrams(s, 5);
    CHECK(multi.counts.size() == plain.counts.size());
    for (const auto& [tok, count] : plain.counts) {
      CHECK(multi.counts.at("q5:" + tok) == count);
    }
  }

  // disjoint-union additivity over disjoint tokenizer sets
  for (int i = 0; i < 100; ++i) {
    const std::string s = random_string(rng);
    const auto a = tokenize_multi(s, {Tokenizer::w1, Tokenizer::q3});
    const auto b = tokenize_multi(s, {Tokenizer::q6});
    const auto both = tokenize_multi(s, {Tokenizer::w1, Tokenizer::q3, Tokenizer::q6});
    CHECK(both.total() == a.total() + b.total());
    for (const auto& [tok, count] : a.counts) CHECK(both.counts.at(tok) == count);
    for (const auto& [tok, count] : b.counts) CHECK(both.counts.at(tok) == count);
  }
}

TEST_CASE("jaccard") {
  const std::string t = "I like vanilla";
  const std::string tp = "I lik3 vanila";

  // word level: intersection {I}, union of 5
  CHECK(jaccard(tokenize_words(t, 1), tokenize_words(tp, 1)) == 0.2);

  // 3-gram level from the set oracle: 7 shared of 16 total
  const double q3 = jaccard(tokenize_qgrams(t, 3), tokenize_qgrams(tp, 3));
  CHECK(q3 == 7.0 / 16.0);
  CHECK(q3 > 0.2);  // grams are more robust to the misspellings

  CHECK(jaccard(TokenBag{}, TokenBag{}) == 1.0);
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    const auto a = tokenize_qgrams(random_string(rng), 3);
    const auto b = tokenize_qgrams(random_string(rng), 3);
    CHECK(jaccard(a, b) == jaccard(b, a));
    CHECK(jaccard(a, a) == 1.0);
  }
}

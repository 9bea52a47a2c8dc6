#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace textsweep {

// The fifteen boolean transformation flags, indexed in the alphabetical
// order used by the canonical configuration string.
enum class Flag : int {
  del_d1,
  del_d2,
  del_diac,
  del_ent,
  del_punc,
  del_sw,
  emo,
  lc,
  lem,
  neg,
  num,
  stem,
  tfidf,
  url,
  usr,
};
inline constexpr int kNumFlags = 15;

const char* flag_name(Flag f);
std::optional<Flag> flag_from_name(std::string_view name);

enum class Tokenizer : int { w1, w2, q3, q4, q5, q6, q7 };
inline constexpr int kNumTokenizers = 7;

const char* tokenizer_name(Tokenizer t);
std::optional<Tokenizer> tokenizer_from_name(std::string_view name);

// One point in the search space: a flag assignment plus a non-empty set of
// tokenizers. Stored packed so enumerating the full space stays cheap.
struct Configuration {
  std::uint16_t flags = 0;      // bit i <=> Flag(i)
  std::uint8_t tokenizers = 0;  // bit i <=> Tokenizer(i)

  bool test(Flag f) const { return flags >> static_cast<int>(f) & 1; }
  void set(Flag f, bool on = true) {
    const std::uint16_t bit = static_cast<std::uint16_t>(1u << static_cast<int>(f));
    flags = on ? flags | bit : flags & ~bit;
  }
  bool has(Tokenizer t) const { return tokenizers >> static_cast<int>(t) & 1; }
  void add(Tokenizer t) { tokenizers |= static_cast<std::uint8_t>(1u << static_cast<int>(t)); }

  std::vector<Tokenizer> tokenizer_list() const;

  // Canonical string: "del_d1=0,...,usr=1;tok=w1+q3" with flags in
  // alphabetical order and tokenizers in w1..q7 order. Unique per
  // configuration; requires a non-empty tokenizer set.
  std::string id() const;

  // Integer whose ordering matches the canonical string ordering of the
  // flag fragment (del_d1 is the most significant bit).
  std::uint16_t flag_order_key() const;

  bool operator==(const Configuration&) const = default;
};

// Parses a full canonical id. Throws std::invalid_argument on malformed
// input, unknown names, duplicates or an empty tokenizer set.
Configuration parse_config_id(std::string_view id);

// Parses a flags-only fragment such as "stem=1,neg=1" (unlisted flags stay
// as in `base`). An optional ";tok=..." suffix is honored when present.
Configuration parse_config_fragment(std::string_view fragment, Configuration base = {});

// "w1+q3+q4" -> tokenizer bit set; throws on unknown names or empty input.
std::uint8_t parse_tokenizer_set(std::string_view spec);
std::string tokenizer_set_name(std::uint8_t set);

}  // namespace textsweep

#include "textsweep/config.hpp"

#include <array>
#include <stdexcept>

namespace textsweep {
namespace {

constexpr std::array<const char*, kNumFlags> kFlagNames = {
    "del_d1", "del_d2", "del_diac", "del_ent", "del_punc", "del_sw", "emo",
    "lc",     "lem",    "neg",      "num",     "stem",     "tfidf",  "url",
    "usr"};

constexpr std::array<const char*, kNumTokenizers> kTokenizerNames = {
    "w1", "w2", "q3", "q4", "q5", "q6", "q7"};

}  // namespace

const char* flag_name(Flag f) { return kFlagNames[static_cast<int>(f)]; }

std::optional<Flag> flag_from_name(std::string_view name) {
  for (int i = 0; i < kNumFlags; ++i) {
    if (name == kFlagNames[i]) return static_cast<Flag>(i);
  }
  return std::nullopt;
}

const char* tokenizer_name(Tokenizer t) { return kTokenizerNames[static_cast<int>(t)]; }

std::optional<Tokenizer> tokenizer_from_name(std::string_view name) {
  for (int i = 0; i < kNumTokenizers; ++i) {
    if (name == kTokenizerNames[i]) return static_cast<Tokenizer>(i);
  }
  return std::nullopt;
}

std::vector<Tokenizer> Configuration::tokenizer_list() const {
  std::vector<Tokenizer> out;
  for (int i = 0; i < kNumTokenizers; ++i) {
    if (tokenizers >> i & 1) out.push_back(static_cast<Tokenizer>(i));
  }
  return out;
}

std::string Configuration::id() const {
  if (tokenizers == 0) throw std::invalid_argument("configuration has no tokenizers");
  std::string out;
  out.reserve(128);
  for (int i = 0; i < kNumFlags; ++i) {
    if (i > 0) out.push_back(',');
    out += kFlagNames[i];
    out.push_back('=');
    out.push_back(test(static_cast<Flag>(i)) ? '1' : '0');
  }
  out += ";tok=";
  out += tokenizer_set_name(tokenizers);
  return out;
}

std::uint16_t Configuration::flag_order_key() const {
  std::uint16_t key = 0;
  for (int i = 0; i < kNumFlags; ++i) {
    key = static_cast<std::uint16_t>(key << 1 | (flags >> i & 1));
  }
  return key;
}

std::string tokenizer_set_name(std::uint8_t set) {
  std::string out;
  for (int i = 0; i < kNumTokenizers; ++i) {
    if (!(set >> i & 1)) continue;
    if (!out.empty()) out.push_back('+');
    out += kTokenizerNames[i];
  }
  return out;
}

std::uint8_t parse_tokenizer_set(std::string_view spec) {
  std::uint8_t set = 0;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t end = spec.find('+', pos);
    const std::string_view name =
        spec.substr(pos, end == std::string_view::npos ? spec.size() - pos : end - pos);
    const auto tok = tokenizer_from_name(name);
    if (!tok) throw std::invalid_argument("unknown tokenizer: '" + std::string(name) + "'");
    set |= static_cast<std::uint8_t>(1u << static_cast<int>(*tok));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (set == 0) throw std::invalid_argument("empty tokenizer set");
  return set;
}

namespace {

void apply_flag_pairs(std::string_view flags_part, Configuration& cfg, bool require_all) {
  std::array<bool, kNumFlags> seen{};
  std::size_t pos = 0;
  while (pos < flags_part.size()) {
    const std::size_t end = flags_part.find(',', pos);
    const std::string_view pair =
        flags_part.substr(pos, end == std::string_view::npos ? flags_part.size() - pos : end - pos);
    const std::size_t eq = pair.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("malformed flag assignment: '" + std::string(pair) + "'");
    const auto flag = flag_from_name(pair.substr(0, eq));
    if (!flag) throw std::invalid_argument("unknown flag: '" + std::string(pair.substr(0, eq)) + "'");
    const std::string_view val = pair.substr(eq + 1);
    if (val != "0" && val != "1")
      throw std::invalid_argument("flag value must be 0 or 1: '" + std::string(pair) + "'");
    if (seen[static_cast<int>(*flag)])
      throw std::invalid_argument("duplicate flag: " + std::string(flag_name(*flag)));
    seen[static_cast<int>(*flag)] = true;
    cfg.set(*flag, val == "1");
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (require_all) {
    for (int i = 0; i < kNumFlags; ++i) {
      if (!seen[i])
        throw std::invalid_argument(std::string("missing flag: ") + kFlagNames[i]);
    }
  }
}

}  // namespace

Configuration parse_config_id(std::string_view id) {
  const std::size_t semi = id.find(';');
  if (semi == std::string_view::npos)
    throw std::invalid_argument("configuration id lacks ';tok=' section");
  const std::string_view tok_part = id.substr(semi + 1);
  if (tok_part.substr(0, 4) != "tok=")
    throw std::invalid_argument("configuration id lacks 'tok=' after ';'");
  Configuration cfg;
  apply_flag_pairs(id.substr(0, semi), cfg, /*require_all=*/true);
  cfg.tokenizers = parse_tokenizer_set(tok_part.substr(4));
  return cfg;
}

Configuration parse_config_fragment(std::string_view fragment, Configuration base) {
  Configuration cfg = base;
  std::string_view flags_part = fragment;
  const std::size_t semi = fragment.find(';');
  if (semi != std::string_view::npos) {
    const std::string_view tok_part = fragment.substr(semi + 1);
    if (tok_part.substr(0, 4) != "tok=")
      throw std::invalid_argument("expected 'tok=' after ';'");
    cfg.tokenizers = parse_tokenizer_set(tok_part.substr(4));
    flags_part = fragment.substr(0, semi);
  }
  if (!flags_part.empty()) apply_flag_pairs(flags_part, cfg, /*require_all=*/false);
  return cfg;
}

}  // namespace textsweep

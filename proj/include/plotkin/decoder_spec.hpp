#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "plotkin/variants.hpp"

namespace plotkin {

// Parsed form of a --decoder string. Grammar:
//   spec  := term (";" term)*
//   term  := fam "(" i "," j ")" ["xL" int]
//          | "dplist" ["xL" int]
//          | "combo" "(" i "," j "|" i "," j ")"
//   fam   := "v4" | "v" | "v0"
// Pairs are unordered and normalized; duplicate terms are rejected. The three
// redundant four-block pairs are folded onto their canonical partners with a
// warning instead of an error.
struct DecoderTerm {
  enum class Kind { Variant, DpList, Combo } kind = Kind::Variant;
  VariantSpec variant;
  int list_size = 1;                      // DpList
  std::pair<int, int> p1{0, 1}, p2{2, 3};  // Combo
  std::string to_string() const {
    switch (kind) {
      case Kind::Variant: return variant.to_string();
      case Kind::DpList:
        return list_size > 1 ? "dplistxL" + std::to_string(list_size) : "dplist";
      case Kind::Combo:
        return "combo(" + std::to_string(p1.first) + "," + std::to_string(p1.second) + "|" +
               std::to_string(p2.first) + "," + std::to_string(p2.second) + ")";
    }
    return {};
  }
};

struct ParsedDecoderSpec {
  std::vector<DecoderTerm> terms;
  std::vector<std::string> warnings;
};

class DecoderSpecError : public std::invalid_argument {
 public:
  DecoderSpecError(const std::string& msg, size_t pos)
      : std::invalid_argument("decoder spec, position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
  size_t position;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  ParsedDecoderSpec parse() {
    ParsedDecoderSpec out;
    skip_ws();
    if (eof()) throw DecoderSpecError("empty specification", 0);
    out.terms.push_back(term(out));
    skip_ws();
    while (!eof()) {
      expect(';');
      skip_ws();
      out.terms.push_back(term(out));
      skip_ws();
    }
    for (size_t a = 0; a < out.terms.size(); ++a)
      for (size_t b = a + 1; b < out.terms.size(); ++b)
        if (out.terms[a].to_string() == out.terms[b].to_string())
          throw DecoderSpecError("duplicate term '" + out.terms[a].to_string() + "'", 0);
    return out;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c)
      throw DecoderSpecError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool try_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw DecoderSpecError("expected an integer", pos_);
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  std::pair<int, int> block_pair() {
    skip_ws();
    int i = integer();
    skip_ws();
    expect(',');
    int j = integer();
    if (i < 0 || i > 3 || j < 0 || j > 3)
      throw DecoderSpecError("block index out of range 0..3", pos_);
    if (i == j) throw DecoderSpecError("block pair must use two distinct blocks", pos_);
    if (i > j) std::swap(i, j);
    return {i, j};
  }
  int optional_list_size() {
    skip_ws();
    if (try_word("xL")) {
      int L = integer();
      if (L < 1) throw DecoderSpecError("list size must be >= 1", pos_);
      return L;
    }
    return 1;
  }

  DecoderTerm term(ParsedDecoderSpec& out) {
    skip_ws();
    size_t start = pos_;
    DecoderTerm t;
    if (try_word("v4")) {
      t.kind = DecoderTerm::Kind::Variant;
      t.variant.family = VariantFamily::V4;
      expect('(');
      auto [i, j] = block_pair();
      skip_ws();
      expect(')');
      bool changed = false;
      auto p = normalize_v4_pair(i, j, &changed);
      if (changed)
        out.warnings.push_back("v4(" + std::to_string(i) + "," + std::to_string(j) +
                               ") is equivalent to v4(" + std::to_string(p.first) + "," +
                               std::to_string(p.second) + "); using the canonical pair");
      t.variant.i = p.first;
      t.variant.j = p.second;
      t.variant.list_size = optional_list_size();
      return t;
    }
    if (try_word("v0")) {
      t.kind = DecoderTerm::Kind::Variant;
      t.variant.family = VariantFamily::V0;
      expect('(');
      auto [i, j] = block_pair();
      skip_ws();
      expect(')');
      t.variant.i = i;
      t.variant.j = j;
      t.variant.list_size = optional_list_size();
      return t;
    }
    if (try_word("dplist")) {
      t.kind = DecoderTerm::Kind::DpList;
      t.list_size = optional_list_size();
      return t;
    }
    if (try_word("combo")) {
      t.kind = DecoderTerm::Kind::Combo;
      expect('(');
      t.p1 = block_pair();
      skip_ws();
      expect('|');
      t.p2 = block_pair();
      skip_ws();
      expect(')');
      std::array<bool, 4> seen{};
      for (int x : {t.p1.first, t.p1.second, t.p2.first, t.p2.second}) {
        if (seen[x]) throw DecoderSpecError("combo pairs must partition the four blocks", start);
        seen[x] = true;
      }
      return t;
    }
    if (try_word("v")) {
      t.kind = DecoderTerm::Kind::Variant;
      t.variant.family = VariantFamily::V;
      expect('(');
      auto [i, j] = block_pair();
      skip_ws();
      expect(')');
      t.variant.i = i;
      t.variant.j = j;
      t.variant.list_size = optional_list_size();
      return t;
    }
    throw DecoderSpecError("expected one of v4(…), v(…), v0(…), dplist, combo(…)", start);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline ParsedDecoderSpec parse_decoder_spec(std::string_view s) {
  return detail::SpecParser(s).parse();
}

// Convenience for specs made of plain variants only.
inline std::vector<VariantSpec> parse_variant_specs(std::string_view s) {
  ParsedDecoderSpec parsed = parse_decoder_spec(s);
  std::vector<VariantSpec> out;
  for (const auto& t : parsed.terms) {
    if (t.kind != DecoderTerm::Kind::Variant)
      throw std::invalid_argument("decoder spec: only plain variants are allowed here");
    out.push_back(t.variant);
  }
  return out;
}

}  // namespace plotkin

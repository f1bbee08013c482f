#include "footsort/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

namespace footsort {
namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

int letter_value(char ch) {
  if (ch >= 'a' && ch <= 'z') return ch - 'a';
  if (ch >= 'A' && ch <= 'Z') return 26 + (ch - 'A');
  if (ch >= '0' && ch <= '9') return 52 + (ch - '0');
  return -1;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

// Compacts raw keys to dense ranks. `spell` renders a raw key as a label.
template <class Spell>
ParsedOrdering compact(const std::vector<std::uint64_t>& raw, Spell spell) {
  std::map<std::uint64_t, Color> rank;
  for (auto k : raw) rank.emplace(k, 0);
  ParsedOrdering out;
  Color next = 0;
  for (auto& [key, id] : rank) {
    id = next++;
    out.labels.push_back(spell(key));
  }
  std::vector<Color> colors;
  colors.reserve(raw.size());
  for (auto k : raw) colors.push_back(rank.at(k));
  out.ordering = SockOrdering(std::move(colors));
  return out;
}

}  // namespace

ParsedOrdering parse_ordering(std::string_view text) {
  const auto tokens = split_tokens(text);
  if (tokens.empty()) return {};

  std::vector<std::uint64_t> raw;
  if (tokens.size() == 1) {
    for (char ch : tokens.front()) {
      const int v = letter_value(ch);
      if (v < 0) {
        throw std::invalid_argument(std::string("invalid sock letter '") + ch + "'");
      }
      raw.push_back(static_cast<std::uint64_t>(v));
    }
    return compact(raw, [](std::uint64_t v) { return std::string(1, letter_for(static_cast<Color>(v))); });
  }

  for (auto tok : tokens) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("invalid color id '" + std::string(tok) + "'");
    }
    raw.push_back(v);
  }
  return compact(raw, [](std::uint64_t v) { return std::to_string(v); });
}

char letter_for(Color c) {
  if (c < 26) return static_cast<char>('a' + c);
  if (c < 52) return static_cast<char>('A' + (c - 26));
  if (c < 62) return static_cast<char>('0' + (c - 52));
  throw std::out_of_range("color id has no letter spelling");
}

std::string format_colors(std::span<const Color> colors) {
  const bool letters = std::all_of(colors.begin(), colors.end(), [](Color c) { return c < 62; });
  std::string out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (letters) {
      out.push_back(letter_for(colors[i]));
    } else {
      if (i) out.push_back(' ');
      out += std::to_string(colors[i]);
    }
  }
  return out;
}

std::string format_ordering(const SockOrdering& s) { return format_colors(s.colors()); }

std::string format_colors(std::span<const Color> colors, const std::vector<std::string>& labels) {
  const bool single = std::all_of(labels.begin(), labels.end(),
                                  [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (!single && i) out.push_back(' ');
    out += labels.at(colors[i]);
  }
  return out;
}

}  // namespace footsort

#include "aimp/tagger.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace aimp::nlp {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_terminal_punct(char c) {
  return c == '.' || c == '?' || c == '!' || c == ',';
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_tab(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

bool is_number_literal(std::string_view w) {
  if (w.empty()) return false;
  double v;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  return ec == std::errc() && ptr == w.data() + w.size() && (w[0] >= '0' && w[0] <= '9');
}

// Closed-class words. Open-class vocabulary lives in the shipped lexicon file.
const std::map<std::string, std::string, std::less<>>& closed_class() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"the", "DT"},     {"a", "DT"},       {"an", "DT"},       {"this", "DT"},     {"that", "DT"},
      {"these", "DT"},   {"those", "DT"},   {"some", "DT"},     {"each", "DT"},     {"every", "DT"},
      {"another", "DT"}, {"my", "PRP$"},    {"your", "PRP$"},   {"his", "PRP$"},    {"its", "PRP$"},
      {"our", "PRP$"},   {"their", "PRP$"}, {"her", "PRP"},     {"i", "PRP"},       {"you", "PRP"},
      {"he", "PRP"},     {"she", "PRP"},    {"it", "PRP"},      {"we", "PRP"},      {"they", "PRP"},
      {"him", "PRP"},    {"them", "PRP"},   {"me", "PRP"},      {"us", "PRP"},      {"hers", "PRP"},
      {"from", "IN"},    {"in", "IN"},      {"on", "IN"},       {"at", "IN"},       {"for", "IN"},
      {"with", "IN"},    {"of", "IN"},      {"into", "IN"},     {"onto", "IN"},     {"by", "IN"},
      {"to", "TO"},      {"and", "CC"},     {"or", "CC"},       {"but", "CC"},      {"how", "WRB"},
      {"many", "JJ"},    {"much", "JJ"},    {"more", "JJR"},    {"fewer", "JJR"},   {"less", "JJR"},
      {"now", "RB"},     {"then", "RB"},    {"today", "RB"},    {"yesterday", "RB"}, {"altogether", "RB"},
      {"also", "RB"},    {"later", "RB"},   {"away", "RB"},     {"still", "RB"},    {"again", "RB"},
  };
  return table;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j == i) break;
    std::string_view chunk = text.substr(i, j - i);
    i = j;

    std::vector<std::string> trailing;
    while (!chunk.empty() && is_terminal_punct(chunk.back())) {
      trailing.insert(trailing.begin(), std::string(1, chunk.back()));
      chunk.remove_suffix(1);
    }
    if (chunk.size() > 2 && (ends_with(chunk, "'s") || ends_with(chunk, "'S"))) {
      out.emplace_back(chunk.substr(0, chunk.size() - 2));
      out.emplace_back("'s");
    } else if (!chunk.empty()) {
      out.emplace_back(chunk);
    }
    for (auto& p : trailing) out.push_back(std::move(p));
  }
  return out;
}

std::string singularize(std::string_view noun) {
  std::string w(noun);
  if (w.size() <= 2 || w.back() != 's' || ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) {
    return w;
  }
  if (ends_with(w, "ies") && w.size() > 3) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view sfx : {"ches", "shes", "xes", "sses", "zes", "oes"}) {
    if (ends_with(w, sfx)) return w.substr(0, w.size() - 2);
  }
  return w.substr(0, w.size() - 1);
}

NumberWords NumberWords::defaults() {
  NumberWords n;
  const char* units[] = {"zero",    "one",     "two",      "three",    "four",    "five",   "six",
                         "seven",   "eight",   "nine",     "ten",      "eleven",  "twelve", "thirteen",
                         "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty"};
  for (int v = 0; v <= 20; ++v) n.table_[units[v]] = v;
  const char* tens[] = {"thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};
  for (int k = 0; k < 7; ++k) n.table_[tens[k]] = 30 + 10 * k;
  n.table_["a"] = 1;
  n.table_["an"] = 1;
  n.table_["dozen"] = 12;
  return n;
}

NumberWords NumberWords::parse(std::string_view text, NumberWords base) {
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(text)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_tab(line);
    if (cols.size() != 2) throw FormatError(line_no, "expected word<TAB>value");
    double v = 0;
    auto [ptr, ec] = std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), v);
    if (ec != std::errc() || ptr != cols[1].data() + cols[1].size() || !std::isfinite(v)) {
      throw FormatError(line_no, "bad number '" + cols[1] + "'");
    }
    base.table_[lowercase(cols[0])] = v;
  }
  return base;
}

std::optional<double> NumberWords::lookup(std::string_view word) const {
  auto it = table_.find(word);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool NumberWords::is_tens(std::string_view word) const {
  auto v = lookup(word);
  return v && *v >= 20 && *v <= 90 && std::fmod(*v, 10.0) == 0.0 && !is_article(word);
}

bool NumberWords::is_unit(std::string_view word) const {
  auto v = lookup(word);
  return v && *v >= 1 && *v <= 9 && std::floor(*v) == *v && !is_article(word);
}

TaggerLexicon TaggerLexicon::parse(std::string_view text) {
  TaggerLexicon lex;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(text)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_tab(line);
    if (cols.size() != 3 || cols[0].empty() || cols[1].empty() || cols[2].empty()) {
      throw FormatError(line_no, "expected word<TAB>POS<TAB>lemma");
    }
    lex.entries_[lowercase(cols[0])] = Entry{cols[1], cols[2]};
  }
  return lex;
}

TaggerLexicon TaggerLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tagger lexicon '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const TaggerLexicon::Entry* TaggerLexicon::find(std::string_view lowercase_word) const {
  auto it = entries_.find(lowercase_word);
  return it == entries_.end() ? nullptr : &it->second;
}

bool TaggerLexicon::is_common_noun(std::string_view lowercase_word) const {
  const Entry* e = find(lowercase_word);
  return e && (e->pos == "NN" || e->pos == "NNS");
}

std::vector<Token> Tagger::tag(const std::vector<std::string>& words) const {
  std::vector<Token> out;
  out.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    const std::string& w = words[k];
    std::string lower = lowercase(w);
    Token t{static_cast<int>(k) + 1, w, lower, ""};
    if (w == "." || w == "?" || w == "!") {
      t.pos = ".";
    } else if (w == ",") {
      t.pos = ",";
    } else if (w == "'s" || w == "'") {
      t.pos = "POS";
    } else if (auto it = closed_class().find(lower); it != closed_class().end()) {
      t.pos = it->second;
    } else if (is_number_literal(w) || numbers_.lookup(lower)) {
      t.pos = "CD";
    } else if (const auto* e = lexicon_.find(lower)) {
      t.pos = e->pos;
      t.lemma = e->lemma;
    } else if (std::isupper(static_cast<unsigned char>(w[0]))) {
      t.pos = "NNP";
      t.lemma = w;
    } else if (ends_with(lower, "ly")) {
      t.pos = "RB";
    } else if (ends_with(lower, "ed") && lower.size() > 3) {
      t.pos = "VBD";
      t.lemma = lower.substr(0, lower.size() - 2);
    } else if (ends_with(lower, "ing") && lower.size() > 4) {
      t.pos = "VBG";
      t.lemma = lower.substr(0, lower.size() - 3);
    } else if (lower.size() > 2 && lower.back() == 's' && !ends_with(lower, "ss")) {
      t.pos = "NNS";
      t.lemma = singularize(lower);
    } else {
      t.pos = "NN";
    }
    out.push_back(std::move(t));
  }
  // "her" is possessive when a nominal follows it.
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    if (lowercase(out[k].text) != "her") continue;
    const std::string& next = out[k + 1].pos;
    if (is_noun_tag(next) || next == "JJ" || next == "CD" || next == "JJR") out[k].pos = "PRP$";
  }
  return out;
}

}  // namespace aimp::nlp

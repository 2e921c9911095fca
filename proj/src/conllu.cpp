#include "aimp/conllu.hpp"

#include <charconv>
#include <sstream>

namespace aimp::nlp {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
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

bool parse_int(const std::string& s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

struct Pending {
  std::vector<Token> tokens;
  std::vector<int> heads;
  std::vector<std::string> relations;
  std::size_t first_line = 0;
};

void flush(Pending& p, std::vector<SentenceAnnotation>& out) {
  if (p.tokens.empty()) return;
  std::vector<std::string> words;
  for (const auto& t : p.tokens) words.push_back(t.text);
  try {
    DepGraph g(std::move(p.tokens), std::move(p.heads), std::move(p.relations));
    out.push_back({render(words), std::move(g)});
  } catch (const InvalidGraph& e) {
    throw FormatError(p.first_line, e.what());
  }
  p = Pending{};
}

}  // namespace

std::vector<SentenceAnnotation> load_conllu(std::string_view text) {
  std::vector<SentenceAnnotation> out;
  Pending cur;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      flush(cur, out);
      continue;
    }
    if (line.front() == '#') continue;

    auto cols = split_tabs(line);
    if (cols.size() != 10) {
      throw FormatError(line_no, "expected 10 tab-separated columns, found " + std::to_string(cols.size()));
    }
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;

    int index = 0;
    if (!parse_int(id, index)) throw FormatError(line_no, "non-integer ID '" + id + "'");
    if (index != static_cast<int>(cur.tokens.size()) + 1) {
      throw FormatError(line_no, "ID " + id + " out of sequence");
    }
    int head = 0;
    if (!parse_int(cols[6], head)) throw FormatError(line_no, "non-integer HEAD '" + cols[6] + "'");
    if (head < 0) throw FormatError(line_no, "negative HEAD");
    if (cols[1].empty() || cols[1] == "_") throw FormatError(line_no, "empty FORM");
    if (cur.tokens.empty()) cur.first_line = line_no;

    std::string lemma = cols[2] == "_" ? cols[1] : cols[2];
    std::string pos_tag = cols[3] == "_" ? cols[4] : cols[3];
    cur.tokens.push_back(Token{index, cols[1], lemma, pos_tag});
    cur.heads.push_back(head);
    cur.relations.push_back(cols[7]);
  }
  flush(cur, out);
  return out;
}

std::string write_conllu(const std::vector<SentenceAnnotation>& sentences) {
  std::ostringstream os;
  for (const auto& s : sentences) {
    os << "# text = " << s.original_text << '\n';
    for (const auto& t : s.graph.tokens()) {
      os << t.index << '\t' << t.text << '\t' << t.lemma << '\t' << t.pos << "\t_\t_\t" << s.graph.head(t.index)
         << '\t' << s.graph.relation(t.index) << "\t_\t_\n";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace aimp::nlp

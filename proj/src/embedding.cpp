#include "aimp/embedding.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace aimp::cat {

double cosine_similarity(std::span<const double> v1, std::span<const double> v2) {
  if (v1.size() != v2.size()) {
    throw DimensionMismatch("vectors of dimension " + std::to_string(v1.size()) + " and " +
                            std::to_string(v2.size()));
  }
  double dot = 0, n1 = 0, n2 = 0;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    dot += v1[i] * v2[i];
    n1 += v1[i] * v1[i];
    n2 += v2[i] * v2[i];
  }
  if (n1 == 0 || n2 == 0) throw ZeroVector("cosine similarity of a zero vector");
  return dot / (std::sqrt(n1) * std::sqrt(n2));
}

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw DimensionMismatch("embedding dimension must be positive");
}

void EmbeddingTable::insert(std::string word, std::vector<double> v) {
  if (v.size() != dimension_) {
    throw DimensionMismatch("vector for '" + word + "' has dimension " + std::to_string(v.size()));
  }
  double norm = 0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0 || !std::isfinite(norm)) throw ZeroVector("vector for '" + word + "' cannot be normalized");
  for (double& x : v) x /= norm;
  entries_.insert_or_assign(std::move(word), std::move(v));
}

const std::vector<double>* EmbeddingTable::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

EmbeddingTable parse_word2vec(std::string_view text) {
  std::size_t pos = 0, line_no = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t nl = text.find('\n', pos);
    line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    return true;
  };

  std::string_view line;
  if (!next_line(line)) throw FormatError(1, "missing header");
  auto header = fields(line);
  std::size_t count = 0, dim = 0;
  if (header.size() != 2 || !parse_number(header[0], count) || !parse_number(header[1], dim) || dim == 0) {
    throw FormatError(line_no, "expected '<vocab_count> <dimension>' header");
  }
  EmbeddingTable table(dim);
  std::size_t rows = 0;
  while (next_line(line)) {
    auto f = fields(line);
    if (f.empty()) continue;
    if (f.size() != dim + 1) {
      throw FormatError(line_no, "expected a word and " + std::to_string(dim) + " values");
    }
    std::vector<double> v(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!parse_number(f[k + 1], v[k])) throw FormatError(line_no, "bad value '" + std::string(f[k + 1]) + "'");
    }
    try {
      table.insert(std::string(f[0]), std::move(v));
    } catch (const ZeroVector& e) {
      throw FormatError(line_no, e.what());
    }
    ++rows;
  }
  if (rows != count) {
    throw FormatError(1, "header promises " + std::to_string(count) + " vectors, found " + std::to_string(rows));
  }
  return table;
}

EmbeddingTable load_word2vec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embeddings '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_word2vec(ss.str());
}

}  // namespace aimp::cat

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aimp/errors.hpp"

namespace aimp::cat {

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

/// V1 . V2 / (|V1| |V2|).
double cosine_similarity(std::span<const double> v1, std::span<const double> v2);

/// Word vectors, each stored at unit L2 norm.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  /// Normalizes `v` before storing it. Throws DimensionMismatch or ZeroVector.
  void insert(std::string word, std::vector<double> v);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(std::string_view word) const { return entries_.find(word) != entries_.end(); }
  /// nullptr when absent.
  const std::vector<double>* find(std::string_view word) const;

  const std::map<std::string, std::vector<double>, std::less<>>& entries() const { return entries_; }

 private:
  std::size_t dimension_;
  std::map<std::string, std::vector<double>, std::less<>> entries_;
};

/// word2vec text format: a `<count> <dimension>` header, then `word v1 ... vd`.
/// Throws FormatError on a bad header, a short row, a count mismatch or a zero vector.
EmbeddingTable parse_word2vec(std::string_view text);
EmbeddingTable load_word2vec(const std::string& path);

}  // namespace aimp::cat

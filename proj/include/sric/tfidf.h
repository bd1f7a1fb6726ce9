// sric/tfidf.h

// Copyright 2026  The SRIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SRIC_TFIDF_H_
#define SRIC_TFIDF_H_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Sparse>
#include <nlohmann/json.hpp>

#include "sric/common.h"

namespace sric {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Raw-count term frequencies weighted by the smoothed inverse document
/// frequency idf(t) = ln((1 + N) / (1 + df(t))) + 1, each row scaled to unit
/// L2 norm. Tokens are whitespace-separated.
class TfidfVectorizer {
 public:
  /// Fixes the vocabulary and idf from `docs`. Throws Error when no token
  /// occurs at all.
  void fit(std::span<const std::string> docs);
  /// Tokens outside the fitted vocabulary are ignored.
  SparseMatrix transform(std::span<const std::string> docs) const;
  SparseMatrix fit_transform(std::span<const std::string> docs);

  /// Raw counts, before weighting and normalization.
  SparseMatrix counts(std::span<const std::string> docs) const;

  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const Vector& idf() const { return idf_; }
  /// Column of `term`, or -1.
  int column(const std::string& term) const;

  nlohmann::json to_json() const;
  static TfidfVectorizer from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> columns_;
  Vector idf_;
};

}  // namespace sric

#endif  // SRIC_TFIDF_H_

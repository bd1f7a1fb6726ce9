// hashtag_seg.cc

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

#include "sric/hashtag_seg.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <vector>

namespace sric {

FrequencyTable FrequencyTable::parse(std::istream& in) {
  FrequencyTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw ParseError("expected word<TAB>count", line_no);
    std::string_view count_str = std::string_view(line).substr(tab + 1);
    std::int64_t count = 0;
    auto [ptr, ec] = std::from_chars(count_str.data(), count_str.data() + count_str.size(), count);
    if (ec != std::errc() || ptr != count_str.data() + count_str.size())
      throw ParseError("unparsable count", line_no);
    if (count <= 0) throw ParseError("non-positive count", line_no);
    table.counts_[line.substr(0, tab)] += count;
    table.total_ += count;
  }
  if (table.counts_.empty()) throw ParseError("empty frequency table", 0);
  return table;
}

FrequencyTable FrequencyTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open frequency table " + path);
  return parse(in);
}

std::int64_t FrequencyTable::count(std::string_view word) const {
  auto it = counts_.find(std::string(word));
  return it == counts_.end() ? 0 : it->second;
}

double FrequencyTable::log_prob(std::string_view word) const {
  const double log_total = std::log(static_cast<double>(total_));
  if (auto c = count(word); c > 0) return std::log(static_cast<double>(c)) - log_total;
  return -log_total - static_cast<double>(word.size()) * std::log(10.0);
}

namespace {

struct Best {
  double score = -std::numeric_limits<double>::infinity();
  int words = 0;
  std::string text;
};

bool better(const Best& a, const Best& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.words != b.words) return a.words < b.words;
  return a.text < b.text;
}

}  // namespace

std::string segment_body(std::string_view body, const FrequencyTable& freq) {
  if (body.empty()) throw Error("cannot segment an empty hashtag body");
  if (!std::all_of(body.begin(), body.end(),
                   [](char c) { return std::isalnum(static_cast<unsigned char>(c)); }))
    throw Error("hashtag body is not alphanumeric: \"" + std::string(body) + "\"");

  // best[i] is the optimal segmentation of body[0, i).
  std::vector<Best> best(body.size() + 1);
  best[0].score = 0.0;
  for (std::size_t end = 1; end <= body.size(); ++end) {
    std::size_t first = end > kMaxWordLength ? end - kMaxWordLength : 0;
    for (std::size_t start = first; start < end; ++start) {
      const Best& prefix = best[start];
      std::string_view word = body.substr(start, end - start);
      Best cand;
      cand.score = prefix.score + freq.log_prob(word);
      cand.words = prefix.words + 1;
      cand.text = prefix.text.empty() ? std::string(word) : prefix.text + ' ' + std::string(word);
      if (better(cand, best[end])) best[end] = std::move(cand);
    }
  }
  return best.back().text;
}

std::string segment_hashtag(std::string_view surface, const FrequencyTable& freq,
                            const std::unordered_map<std::string, std::string>& overrides) {
  if (surface.empty() || surface.front() != '#')
    throw Error("hashtag must start with '#': \"" + std::string(surface) + "\"");
  if (auto it = overrides.find(std::string(surface)); it != overrides.end()) return it->second;
  std::string body(surface.substr(1));
  for (auto& c : body) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return segment_body(body, freq);
}

void fill_segmentations(Lexicon& lexicon, const FrequencyTable& freq) {
  std::vector<HashtagEntry> entries = lexicon.entries();
  for (auto& e : entries)
    if (e.segmented.empty()) e.segmented = segment_hashtag(e.surface, freq);
  lexicon = Lexicon(std::move(entries));
}

}  // namespace sric

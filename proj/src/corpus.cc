// corpus.cc

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

#include "sric/corpus.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "sric/relation.h"

namespace sric {

namespace {

struct CodePoint {
  char32_t value;
  std::size_t length;
};

// Invalid sequences decode as single bytes so nothing is silently dropped.
CodePoint decode_utf8(std::string_view s, std::size_t i) {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char c = byte(i);
  if (c < 0x80) return {c, 1};
  std::size_t len = (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || i + len > s.size()) return {c, 1};
  char32_t cp = c & (0xFF >> (len + 1));
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) return {c, 1};
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  return {cp, len};
}

bool is_emoji(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) ||  // pictographs, emoticons, flags
         (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols, dingbats
         (cp >= 0x2B00 && cp <= 0x2BFF) ||    // arrows and stars
         (cp >= 0xE0020 && cp <= 0xE007F) ||  // tag sequences
         (cp >= 0xFE00 && cp <= 0xFE0F) ||    // variation selectors
         cp == 0x200D || cp == 0x20E3 || cp == 0x2122 || cp == 0x2139 ||
         (cp >= 0x2194 && cp <= 0x21AA) || cp == 0x00A9 || cp == 0x00AE;
}

bool is_punct(char32_t cp) {
  if (cp == '#') return false;
  if (cp < 0x80) return std::ispunct(static_cast<int>(cp)) != 0;
  return (cp >= 0x00A1 && cp <= 0x00BF) || (cp >= 0x2010 && cp <= 0x2027) ||
         (cp >= 0x2030 && cp <= 0x205E) || (cp >= 0x3001 && cp <= 0x3003) ||
         (cp >= 0x3008 && cp <= 0x3011) || (cp >= 0xFF01 && cp <= 0xFF0F);
}

bool is_unicode_space(char32_t cp) {
  return cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x202F ||
         cp == 0x205F || cp == 0x3000;
}

// Drops emoji and punctuation (keeping '#') and lowercases ASCII.
std::string strip_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (std::size_t i = 0; i < token.size();) {
    CodePoint cp = decode_utf8(token, i);
    if (!is_emoji(cp.value) && !is_punct(cp.value)) {
      if (cp.value < 0x80)
        out.push_back(static_cast<char>(std::tolower(static_cast<int>(cp.value))));
      else
        out.append(token.substr(i, cp.length));
    }
    i += cp.length;
  }
  return out;
}

bool is_number_token(std::string_view stripped) {
  return !stripped.empty() &&
         std::all_of(stripped.begin(), stripped.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

bool all_hashes(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '#'; });
}

std::string normalize_spaces(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    CodePoint cp = decode_utf8(raw, i);
    if (is_unicode_space(cp.value))
      out.push_back(' ');
    else
      out.append(raw.substr(i, cp.length));
    i += cp.length;
  }
  return out;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Minimal RFC 4180 record splitter; records must fit on one line.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  fields.push_back(std::move(field));
  return fields;
}

SentimentLabel label_or_throw(const std::string& name, std::size_t line_no) {
  auto label = parse_sentiment(ascii_lower(name));
  if (!label) throw ParseError("unknown label \"" + name + "\"", line_no);
  return *label;
}

}  // namespace

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::string join_tokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string clean_text(std::string_view raw) {
  static const std::regex kUrl(R"((https?://|www\.)\S*|t\.co/\S*)",
                               std::regex::icase | std::regex::optimize);
  static const std::regex kMention(R"(@\w+)", std::regex::optimize);

  std::string text = normalize_spaces(raw);
  text = std::regex_replace(text, kUrl, " ");
  text = std::regex_replace(text, kMention, " ");

  // Numbers are judged on the token as it will look after emoji and
  // punctuation removal, otherwise "123!!" would survive one pass and not
  // the next.
  std::vector<std::string> kept;
  for (const auto& token : split_tokens(text)) {
    std::string stripped = strip_token(token);
    if (stripped.empty() || all_hashes(stripped)) continue;
    if (stripped.front() != '#' && is_number_token(stripped)) continue;
    kept.push_back(std::move(stripped));
  }
  return join_tokens(kept);
}

Post make_post(std::string id, std::string raw_text, SentimentLabel label) {
  Post post;
  post.id = std::move(id);
  post.raw_text = std::move(raw_text);
  post.clean_text = clean_text(post.raw_text);
  post.label = label;
  for (auto& token : split_tokens(post.clean_text))
    if (token.size() > 1 && token.front() == '#') post.hashtags.push_back(std::move(token));
  return post;
}

std::string HashtagEntry::hashtag_text() const {
  return segmented.empty() ? std::string(body()) : segmented;
}

Lexicon::Lexicon(std::vector<HashtagEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    e.surface = ascii_lower(e.surface);
    if (e.surface.size() < 2 || e.surface.front() != '#')
      throw Error("lexicon surface must start with '#': \"" + e.surface + "\"");
    if (std::any_of(e.surface.begin(), e.surface.end(),
                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      throw Error("lexicon surface contains whitespace: \"" + e.surface + "\"");
    if (!e.segmented.empty()) {
      e.segmented = join_tokens(split_tokens(ascii_lower(e.segmented)));
      std::string joined;
      for (char c : e.segmented)
        if (c != ' ') joined.push_back(c);
      if (joined != e.body())
        throw Error("segmentation \"" + e.segmented + "\" does not spell " + e.surface);
    }
    if (!index_.emplace(e.surface, i).second)
      throw Error("duplicate lexicon surface " + e.surface);
  }
}

std::optional<std::size_t> Lexicon::find(std::string_view surface) const {
  auto it = index_.find(ascii_lower(surface));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Lexicon parse_lexicon(std::istream& in) {
  std::vector<HashtagEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind("//", 0) == 0) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() < 2 || cols.size() > 3)
      throw ParseError("expected surface<TAB>polarity[<TAB>segmentation]", line_no);
    auto polarity = parse_polarity(ascii_lower(cols[1]));
    if (!polarity) throw ParseError("unknown polarity \"" + cols[1] + "\"", line_no);
    HashtagEntry entry{cols[0], cols.size() == 3 ? cols[2] : "", *polarity};
    entries.push_back(std::move(entry));
  }
  try {
    return Lexicon(std::move(entries));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon " + path);
  return parse_lexicon(in);
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  for (const auto& e : lexicon.entries()) {
    out << e.surface << '\t' << to_string(e.polarity);
    if (!e.segmented.empty()) out << '\t' << e.segmented;
    out << '\n';
  }
}

std::vector<Post> parse_corpus(std::istream& in, CorpusFormat format) {
  std::vector<Post> posts;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;

  auto add = [&](std::string id, std::string text, const std::string& label) {
    SentimentLabel parsed = label_or_throw(label, line_no);
    if (id.empty()) throw ParseError("empty id", line_no);
    if (!seen.insert(id).second) throw ParseError("duplicate id \"" + id + "\"", line_no);
    posts.push_back(make_post(std::move(id), std::move(text), parsed));
  };

  if (format == CorpusFormat::Jsonl) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      nlohmann::json record;
      try {
        record = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception&) {
        throw ParseError("malformed JSON record", line_no);
      }
      for (const char* key : {"id", "text", "label"})
        if (!record.is_object() || !record.contains(key) || !record[key].is_string())
          throw ParseError(std::string("missing string field \"") + key + "\"", line_no);
      add(record["id"].get<std::string>(), record["text"].get<std::string>(),
          record["label"].get<std::string>());
    }
    return posts;
  }

  int id_col = -1, text_col = -1, label_col = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split_csv_line(line, line_no);
    if (id_col < 0) {
      for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
        if (fields[i] == "id") id_col = i;
        if (fields[i] == "text") text_col = i;
        if (fields[i] == "label") label_col = i;
      }
      if (id_col < 0 || text_col < 0 || label_col < 0)
        throw ParseError("CSV header must name id, text and label", line_no);
      continue;
    }
    int needed = std::max({id_col, text_col, label_col});
    if (static_cast<int>(fields.size()) <= needed)
      throw ParseError("too few fields", line_no);
    add(fields[id_col], fields[text_col], fields[label_col]);
  }
  return posts;
}

std::vector<Post> ingest_corpus(const std::string& path, CorpusFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path);
  return parse_corpus(in, format);
}

CorpusFormat format_from_path(std::string_view path) {
  return path.size() >= 4 && ascii_lower(path.substr(path.size() - 4)) == ".csv"
             ? CorpusFormat::Csv
             : CorpusFormat::Jsonl;
}

void write_corpus_jsonl(std::ostream& out, std::span<const Post> posts) {
  for (const auto& p : posts) {
    nlohmann::json record = {
        {"id", p.id}, {"text", p.raw_text}, {"label", std::string(to_string(p.label))}};
    out << record.dump() << '\n';
  }
}

std::vector<HashtagEntry> extract_sentiment_hashtags(const Post& post,
                                                     const Lexicon& lexicon) {
  std::vector<HashtagEntry> found;
  std::vector<bool> taken(lexicon.size(), false);
  for (const auto& token : split_tokens(post.clean_text)) {
    auto idx = lexicon.find(token);
    if (idx && !taken[*idx]) {
      taken[*idx] = true;
      found.push_back(lexicon[*idx]);
    }
  }
  return found;
}

std::optional<PairSample> split_post(const Post& post, const Lexicon& lexicon) {
  auto found = extract_sentiment_hashtags(post, lexicon);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    spdlog::debug("post {}: {} sentiment hashtags, using {} and discarding the rest",
                  post.id, found.size(), found.front().surface);

  std::vector<std::string> content;
  for (auto& token : split_tokens(post.clean_text))
    if (!lexicon.contains(token)) content.push_back(std::move(token));

  const HashtagEntry& chosen = found.front();
  PairSample pair;
  pair.post_id = post.id;
  pair.t_c = join_tokens(content);
  pair.t_h = chosen.hashtag_text();
  pair.hashtag_polarity = chosen.polarity;
  pair.post_label = post.label;
  pair.relation = derive_relation(chosen.polarity, post.label);
  return pair;
}

CorpusPartition partition(std::span<const Post> corpus, const Lexicon& lexicon) {
  CorpusPartition parts;
  for (const auto& post : corpus) {
    bool has = std::any_of(post.hashtags.begin(), post.hashtags.end(),
                           [&](const std::string& h) { return lexicon.contains(h); });
    (has ? parts.with_hashtags : parts.without_hashtags).push_back(post);
  }
  return parts;
}

std::string_view to_string(HashtagMode mode) {
  switch (mode) {
    case HashtagMode::Strip: return "strip";
    case HashtagMode::Raw: return "raw";
    case HashtagMode::Segmented: return "segmented";
  }
  return "?";
}

std::optional<HashtagMode> parse_hashtag_mode(std::string_view name) {
  for (auto m : {HashtagMode::Strip, HashtagMode::Raw, HashtagMode::Segmented})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

std::string render_text(const Post& post, const Lexicon& lexicon, HashtagMode mode) {
  if (mode == HashtagMode::Raw) return post.clean_text;
  std::vector<std::string> out;
  for (auto& token : split_tokens(post.clean_text)) {
    if (token.front() != '#') {
      out.push_back(std::move(token));
      continue;
    }
    if (mode == HashtagMode::Strip) continue;
    if (auto idx = lexicon.find(token))
      out.push_back(lexicon[*idx].hashtag_text());
    else
      out.push_back(token.substr(1));
  }
  return join_tokens(out);
}

}  // namespace sric

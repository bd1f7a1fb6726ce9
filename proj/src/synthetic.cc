// synthetic.cc

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

// Template-based fixture corpus. The word banks below are fixed so that a
// given seed always yields the same corpus on every platform.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "sric/corpus.h"
#include "sric/rng.h"

namespace sric {

namespace {

using Bank = std::vector<std::string_view>;

const Bank kHateWords = {
    "invaders", "disgusting", "blame",   "banned",   "dirty",   "filthy",
    "deport",   "vermin",     "liars",   "traitors", "punish",  "ccp",
    "animals",  "spreaders",  "enemy",   "boycott",  "flu",     "lied",
    "pests",    "weaponized", "greedy",  "cheaters", "kickout", "goback",
    "sneaky",   "commies",    "infested", "thieves", "bioweapon", "disease"};

const Bank kCounterWords = {
    "solidarity", "support",  "respect",   "protect", "kindness",  "unity",
    "together",   "racism",   "xenophobia", "wrong",  "shameful",  "stop",
    "love",       "defend",   "welcome",   "equality", "compassion", "not",
    "speakup",    "condemn",  "bigotry",   "community", "stand",    "dignity",
    "humanity",   "wash",     "am",        "empathy", "justice",   "hate"};

const Bank kNeutralWords = {
    "report",   "cases",    "update",    "vaccine",   "hospital", "schedule",
    "data",     "testing",  "masks",     "study",     "officials", "announced",
    "lockdown", "travel",   "guidelines", "press",    "briefing", "numbers",
    "research", "scientists", "experts", "published", "results",  "measures",
    "health",   "clinic",   "statistics", "reopening", "supply",  "policy"};

const Bank kSharedWords = {
    "china",   "virus",      "covid",     "people",  "asian",    "wuhan",
    "world",   "today",      "news",      "everyone", "government", "country",
    "city",    "week",       "this",      "the",     "is",       "all",
    "about",   "pandemic",   "coronavirus", "media", "americans", "outbreak",
    "chinese", "they",       "we",        "now",     "time",     "life"};

const Bank kTopicalTags = {"#news", "#covid19", "#breaking", "#health", "#update"};
const Bank kEmoji = {"\U0001F621", "\U0001F64F", "\U0001F637", "❤️",
                     "\U0001F622"};

// O = word of the post's own class, S = shared topical word, X = word of
// another class. The last two templates carry no lexical class signal.
const std::array<std::string_view, 8> kTemplates = {
    "S O S O S", "O S S O S S", "S S O S", "S O S S X S",
    "X S O S S O", "S O S S S S", "S S S X S", "S S S S S"};
constexpr std::size_t kInformativeTemplates = 6;

const Bank& own_bank(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::Hate: return kHateWords;
    case SentimentLabel::CounterHate: return kCounterWords;
    case SentimentLabel::Neutral: return kNeutralWords;
  }
  return kNeutralWords;
}

// Skewed pick: low indices are frequent, the tail is rare.
std::string_view pick_zipf(const Bank& bank, Rng& rng) {
  double u = rng.uniform();
  return bank[static_cast<std::size_t>(static_cast<double>(bank.size()) * u * u)];
}

std::string_view pick(const Bank& bank, Rng& rng) { return bank[rng.below(bank.size())]; }

std::vector<std::string> template_words(SentimentLabel label, std::string_view tmpl, Rng& rng) {
  std::vector<std::string> words;
  for (char slot : tmpl) {
    if (slot == 'O') {
      words.emplace_back(pick_zipf(own_bank(label), rng));
    } else if (slot == 'S') {
      words.emplace_back(pick_zipf(kSharedWords, rng));
    } else if (slot == 'X') {
      auto other = kAllSentiments[(index_of(label) + 1 + rng.below(2)) % kNumSentiments];
      words.emplace_back(pick_zipf(own_bank(other), rng));
    }
  }
  return words;
}

// Adds the noise that cleaning has to remove: capitalisation, mentions,
// URLs, numbers, emoji and punctuation.
std::string decorate(std::vector<std::string> words, Rng& rng) {
  if (!words.empty() && !words.front().empty() && words.front().front() != '#')
    words.front().front() = static_cast<char>(std::toupper(words.front().front()));
  if (rng.bernoulli(0.15))
    words.insert(words.begin() + static_cast<long>(rng.below(words.size() + 1)),
                 std::to_string(1 + rng.below(999)));
  if (rng.bernoulli(0.2)) words.insert(words.begin(), "@user" + std::to_string(rng.below(100)));
  if (rng.bernoulli(0.1)) words.emplace_back(pick(kEmoji, rng));
  static constexpr std::array<std::string_view, 4> kEnd = {"!", ".", "!!", ""};
  words.back() += kEnd[rng.below(kEnd.size())];
  if (rng.bernoulli(0.2)) {
    std::string url = "https://t.co/";
    for (int i = 0; i < 6; ++i) url.push_back("abcdefghijklmnopqrstuvwxyz0123456789"[rng.below(36)]);
    words.push_back(url);
  }
  return join_tokens(words);
}

// Hashtag polarity per post of one class; `tagged` lists the hashtagged
// posts. Hate and counter-hate posts mostly carry a consistent hashtag and
// only posts with explicit own-class wording get a contradicting one, so a
// post without lexical signal is always resolved by its hashtag. Neutral
// posts lean towards the hateful topical hashtags.
std::vector<Polarity> polarity_schedule(SentimentLabel label, const std::vector<int>& tagged,
                                        const std::vector<bool>& informative, Rng& rng) {
  const int m = static_cast<int>(tagged.size());
  std::vector<Polarity> polarity(informative.size(), Polarity::Hate);
  if (m == 0) return polarity;
  int minority = 0;
  Polarity majority = Polarity::Hate;
  switch (label) {
    case SentimentLabel::Hate:
      minority = static_cast<int>(std::lround(0.25 * m));
      majority = Polarity::Hate;
      break;
    case SentimentLabel::CounterHate:
      minority = static_cast<int>(std::lround(0.25 * m));
      majority = Polarity::CounterHate;
      break;
    case SentimentLabel::Neutral:
      minority = static_cast<int>(std::lround(0.4 * m));
      majority = Polarity::Hate;
      break;
  }
  if (m >= 2) minority = std::clamp(minority, 1, m - 1);
  const Polarity other = majority == Polarity::Hate ? Polarity::CounterHate : Polarity::Hate;

  std::vector<int> preferred, rest;
  for (int i : tagged) {
    polarity[i] = majority;
    (label == SentimentLabel::Neutral || informative[i] ? preferred : rest).push_back(i);
  }
  rng.shuffle(preferred);
  rng.shuffle(rest);
  preferred.insert(preferred.end(), rest.begin(), rest.end());
  for (int j = 0; j < minority; ++j) polarity[preferred[j]] = other;
  return polarity;
}

}  // namespace

Lexicon builtin_lexicon() {
  std::vector<HashtagEntry> entries = {
      {"#chinavirus", "china virus", Polarity::Hate},
      {"#wuhanvirus", "wuhan virus", Polarity::Hate},
      {"#chinesevirus", "chinese virus", Polarity::Hate},
      {"#kungflu", "kung flu", Polarity::Hate},
      {"#ccpvirus", "ccp virus", Polarity::Hate},
      {"#wuflu", "wu flu", Polarity::Hate},
      {"#wuhanflu", "wuhan flu", Polarity::Hate},
      {"#chinaliedpeopledied", "china lied people died", Polarity::Hate},
      {"#makechinapay", "make china pay", Polarity::Hate},
      {"#boycottchina", "boycott china", Polarity::Hate},
      {"#bioweapon", "bioweapon", Polarity::Hate},
      {"#racismisavirus", "racism is a virus", Polarity::CounterHate},
      {"#stopthehate", "stop the hate", Polarity::CounterHate},
      {"#hateisavirus", "hate is a virus", Polarity::CounterHate},
      {"#iamnotavirus", "i am not a virus", Polarity::CounterHate},
      {"#washthehate", "wash the hate", Polarity::CounterHate},
  };
  return Lexicon(std::move(entries));
}

SyntheticCorpus generate_synthetic_corpus(std::uint64_t seed, int n_per_class,
                                          double hashtag_rate) {
  if (n_per_class < 1) throw Error("n_per_class must be >= 1");
  if (!(hashtag_rate >= 0.0 && hashtag_rate <= 1.0))
    throw Error("hashtag_rate must lie in [0, 1]");

  Rng rng(seed);
  SyntheticCorpus out;
  out.lexicon = builtin_lexicon();
  std::array<std::vector<std::string_view>, 2> by_polarity;
  for (const auto& e : out.lexicon.entries())
    by_polarity[static_cast<int>(e.polarity)].push_back(e.surface);

  struct Draft {
    std::string text;
    SentimentLabel label;
  };
  std::vector<Draft> drafts;
  const int m = static_cast<int>(std::lround(hashtag_rate * n_per_class));

  for (SentimentLabel label : kAllSentiments) {
    // Neutral posts always mention something neutral.
    const std::size_t n_templates =
        label == SentimentLabel::Neutral ? kInformativeTemplates : kTemplates.size();
    std::vector<std::size_t> tmpl(static_cast<std::size_t>(n_per_class));
    std::vector<bool> informative(tmpl.size());
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
      tmpl[i] = rng.below(n_templates);
      informative[i] = tmpl[i] < kInformativeTemplates;
    }
    std::vector<int> order(static_cast<std::size_t>(n_per_class));
    for (int i = 0; i < n_per_class; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<int> tagged(order.begin(), order.begin() + m);
    std::sort(tagged.begin(), tagged.end());
    std::vector<bool> is_tagged(tmpl.size(), false);
    for (int i : tagged) is_tagged[i] = true;
    auto polarity = polarity_schedule(label, tagged, informative, rng);

    for (int i = 0; i < n_per_class; ++i) {
      auto words = template_words(label, kTemplates[tmpl[i]], rng);
      if (is_tagged[i]) {
        const auto& pool = by_polarity[static_cast<int>(polarity[i])];
        std::string tag(pool[rng.below(pool.size())]);
        double where = rng.uniform();
        if (where < 0.7)
          words.push_back(tag);
        else if (where < 0.85)
          words.insert(words.begin(), tag);
        else
          words.insert(words.begin() + static_cast<long>(words.size() / 2), tag);
        // Occasionally a second hashtag of the same polarity.
        if (rng.bernoulli(0.1)) words.emplace_back(pool[rng.below(pool.size())]);
      }
      if (rng.bernoulli(0.15)) words.emplace_back(pick(kTopicalTags, rng));
      drafts.push_back({decorate(std::move(words), rng), label});
    }
  }

  rng.shuffle(drafts);
  out.posts.reserve(drafts.size());
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "p%05zu", i);
    out.posts.push_back(make_post(id, std::move(drafts[i].text), drafts[i].label));
  }
  return out;
}

}  // namespace sric

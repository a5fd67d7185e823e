#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dris/crawler.hpp"
#include "dris/json_io.hpp"
#include "dris/types.hpp"

namespace dris {

// Tag weights: a term occurrence counts 4x in the title, 2x in a heading,
// 1x in the body.
inline constexpr double kTitleWeight = 4.0;
inline constexpr double kHeadingWeight = 2.0;
inline constexpr double kBodyWeight = 1.0;

struct FieldCounts {
  int title = 0;
  int heading = 0;
  int body = 0;

  double weighted() const {
    return kTitleWeight * title + kHeadingWeight * heading + kBodyWeight * body;
  }

  friend bool operator==(const FieldCounts&, const FieldCounts&) = default;
};

// Per-field occurrence counts of every term of a page.
std::map<std::string, FieldCounts> field_term_counts(const Page& page);

struct Posting {
  std::string url;
  double wtf = 0.0;  // tag-weighted term frequency
  int tf_title = 0;
  int tf_heading = 0;
  int tf_body = 0;

  friend bool operator==(const Posting&, const Posting&) = default;
};

struct IndexedDoc {
  std::vector<std::string> title_terms;
  int body_len = 0;
  std::int64_t last_modified = 0;
  Origin origin = Origin::kNative;
  std::string home_host;

  friend bool operator==(const IndexedDoc&, const IndexedDoc&) = default;
};

// Inverted index over one domain crawl (native and foreign pages alike).
// Immutable after build; rebuilds produce a new value.
class InvertedIndex {
 public:
  InvertedIndex() = default;

  static InvertedIndex build(const DomainCrawl& crawl);

  int doc_count() const { return static_cast<int>(docs_.size()); }
  std::int64_t built_tick() const { return built_tick_; }

  int df(const std::string& term) const;

  // ln(1 + N/df), 0 for an unseen term.
  double idf(const std::string& term) const;

  // score(q, d) = sum over distinct query terms of wtf * idf, hits with a
  // positive score only, ordered by (score desc, url asc), at most k.
  std::vector<SearchHit> search(const std::vector<std::string>& query, int k) const;

  const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }
  const std::map<std::string, IndexedDoc>& docs() const { return docs_; }

  Json to_json() const;
  static InvertedIndex from_json(const Json& value);

  friend bool operator==(const InvertedIndex&, const InvertedIndex&) = default;

 private:
  std::map<std::string, std::vector<Posting>> postings_;  // term -> by url asc
  std::map<std::string, IndexedDoc> docs_;
  std::int64_t built_tick_ = 0;
};

}  // namespace dris

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dris/crawler.hpp"
#include "dris/json_io.hpp"
#include "dris/text_index.hpp"
#include "dris/types.hpp"

namespace dris {

inline constexpr int kMaxKeywords = 16;
inline constexpr int kAbstractTerms = 30;

// The harvest unit: a compact description of one page as seen by one
// third-level node. Citation evidence always travels on foreign-origin
// records; a record whose page was never downloadable carries citations only.
struct MetadataRecord {
  std::string url;
  std::string home_host;
  Origin origin = Origin::kNative;
  std::vector<std::string> title_terms;
  std::vector<std::pair<std::string, double>> keywords;  // (wtf desc, term asc), <= 16
  std::vector<std::string> abstract_terms;               // first 30 body terms
  std::int64_t datestamp = 0;
  std::vector<Citation> citations;  // target implicitly = url; sorted by citing_host
  std::string source_domain;        // third-level domain that emitted the record
  bool deleted = false;

  // Equality of everything except the datestamp; the record store keeps the
  // old stamp when a recrawl reproduces identical content.
  bool same_content(const MetadataRecord& other) const;

  friend bool operator==(const MetadataRecord&, const MetadataRecord&) = default;
};

Json record_to_json(const MetadataRecord& record);
MetadataRecord record_from_json(const Json& value);

// One native record per native page (datestamp = page last_modified), one
// foreign record per downloaded foreign page (datestamp = crawl tick) and one
// citation-only foreign record per cited target that was not downloaded here
// (native elsewhere in the domain, or gone). Ordered by (url, native first).
std::vector<MetadataRecord> make_records(const DomainCrawl& crawl, const InvertedIndex& index);

struct ListPage {
  std::vector<MetadataRecord> records;
  std::optional<std::string> next_token;
  std::int64_t cursor = -1;  // max datestamp in the store, -1 when empty
};

// Publishable record set of a third-level node, with the incremental listing
// protocol. Listings are ordered by (datestamp asc, url asc, native first)
// and paged through resumption tokens that freeze (from, offset) against the
// current store version; any update invalidates outstanding tokens.
class RecordStore {
 public:
  // Replaces the store with a fresh record set. Keys that disappear get a
  // deleted-marker record stamped `crawl_tick`; records whose content is
  // unchanged keep their previous datestamp so incremental harvests skip
  // them.
  void update(const std::vector<MetadataRecord>& fresh, std::int64_t crawl_tick);

  // from = nullopt lists everything; otherwise records with datestamp > from.
  // limit must be >= 1. Throws BadResumptionToken for a stale or malformed
  // token, ProtocolError for a bad limit.
  ListPage list_records(std::optional<std::int64_t> from, const std::optional<std::string>& token,
                        int limit) const;

  std::int64_t cursor() const;
  std::int64_t version() const { return version_; }
  std::size_t size() const { return records_.size(); }
  std::vector<MetadataRecord> all_records() const;  // listing order

  Json to_json() const;
  static RecordStore from_json(const Json& value);

 private:
  // key: (url, origin rank) — a url can appear both as a native record and as
  // a citation-only foreign record emitted by the same node.
  std::map<std::pair<std::string, int>, MetadataRecord> records_;
  std::int64_t version_ = 0;
};

}  // namespace dris

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dris/json_io.hpp"

namespace dris {

// Whether a document was crawled from a site inside the owning node's domain
// or downloaded once as the target of a cross-site link.
enum class Origin { kNative, kForeign };

std::string_view origin_name(Origin origin);
Origin origin_from_name(std::string_view name);  // throws ParseError

// One ranked result. `sources` lists the domains whose scores contributed:
// the node's own domain at tiers 3 and 2, the contributing child domains
// after a federated merge at tier 1.
struct SearchHit {
  std::string url;
  double score = 0.0;
  std::vector<std::string> title_terms;
  std::vector<std::string> sources;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchResponse {
  std::vector<SearchHit> hits;
  bool partial = false;

  friend bool operator==(const SearchResponse&, const SearchResponse&) = default;
};

Json search_hit_to_json(const SearchHit& hit);  // applies wire_score
SearchHit search_hit_from_json(const Json& value);

}  // namespace dris

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dris/domain_name.hpp"
#include "dris/json_io.hpp"

namespace dris {

// The synthetic web: a deterministic, fully known ground truth that the
// tiered search system is checked against. Pages carry pre-tokenized term
// lists; time is a logical tick advanced only by mutate_web.

struct Page {
  std::string url;  // "http://" + host + "/p<k>", lowercase host, no query
  DomainName host;
  std::vector<std::string> title_terms;
  std::vector<std::string> heading_terms;
  std::vector<std::string> body_terms;
  std::vector<std::string> outlinks;
  std::int64_t last_modified = 0;

  friend bool operator==(const Page&, const Page&) = default;
};

struct Site {
  DomainName host;
  std::map<std::string, Page> pages;  // url -> page

  friend bool operator==(const Site&, const Site&) = default;
};

enum class MutationKind { kCreated, kEdited, kDeleted };

std::string_view mutation_kind_name(MutationKind kind);
MutationKind mutation_kind_from_name(std::string_view name);

struct MutationEvent {
  std::int64_t tick = 0;
  std::string url;
  MutationKind kind = MutationKind::kEdited;

  friend bool operator==(const MutationEvent&, const MutationEvent&) = default;
};

struct WebSnapshot {
  std::map<std::string, Site> sites;  // rendered host -> site
  // Registered tier hierarchy: countries (depth 1), second-level domains
  // (depth 2) and organization domains (depth 3), sorted by rendering.
  // Sites whose host falls under no depth-3 entry are off-domain.
  std::vector<DomainName> registered_domains;
  std::int64_t clock = 0;
  std::vector<MutationEvent> mutation_log;

  std::size_t total_pages() const;
  std::vector<DomainName> domains_at_depth(std::size_t depth) const;

  friend bool operator==(const WebSnapshot&, const WebSnapshot&) = default;
};

struct Range {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

struct GenConfig {
  int countries = 2;
  int slds_per_country = 2;
  int orgs_per_sld = 3;
  Range sites_per_org{1, 2};
  Range pages_per_site{8, 15};
  Range title_terms{1, 3};
  Range heading_terms{0, 3};
  Range body_terms{5, 10};
  int vocabulary = 120;
  double intra_site_link_prob = 0.35;
  double cross_site_link_prob = 0.08;
  int off_domain_site_count = 2;
  std::uint64_t seed = 42;

  void validate() const;  // throws ConfigError naming the bad field

  friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

Json gen_config_to_json(const GenConfig& config);
GenConfig gen_config_from_json(const Json& value);

struct MutationSpec {
  int edit_count = 0;
  int create_count = 0;
  int delete_count = 0;
  std::uint64_t seed = 0;
};

// Pure function of the config (seed included). Every outlink targets an
// existing page, every page gets a globally unique "sent_<n>" body term,
// clock and all last_modified start at 0.
WebSnapshot generate_web(const GenConfig& config);

// Returns a new snapshot with clock+1 and exactly the requested numbers of
// edited / created / deleted pages, all stamped with the new clock and
// appended to the mutation log. Deterministic in (snapshot, spec).
WebSnapshot mutate_web(const WebSnapshot& snapshot, const MutationSpec& spec);

// Lookup; nullptr means not found.
const Page* fetch(const WebSnapshot& snapshot, const std::string& url);

// Sorted list of site hosts whose label sequence ends with `domain`'s labels.
std::vector<std::string> hosts_under(const WebSnapshot& snapshot, const DomainName& domain);

Json snapshot_to_json(const WebSnapshot& snapshot);
WebSnapshot snapshot_from_json(const Json& value);
void save_snapshot(const WebSnapshot& snapshot, const std::filesystem::path& path);
WebSnapshot load_snapshot(const std::filesystem::path& path);

// Host component of a canonical "http://host/..." url.
std::optional<std::string> url_host(std::string_view url);
std::string page_url(std::string_view host, int index);

// The page's current sentinel: the last "sent_" body term. Edits append a
// fresh sentinel, so this is the term that should retrieve the live version.
std::optional<std::string> current_sentinel(const Page& page);

// Crawler-facing view of the snapshot. site_urls models the site-local
// enumeration a spider gets once it is inside a server; fetch is one page
// download.
class Fetcher {
 public:
  virtual ~Fetcher() = default;
  virtual std::optional<Page> fetch(const std::string& url) const = 0;
  virtual bool has_host(const std::string& host) const = 0;
  virtual std::vector<std::string> site_urls(const std::string& host) const = 0;
  virtual std::int64_t clock() const = 0;
};

class SnapshotFetcher : public Fetcher {
 public:
  explicit SnapshotFetcher(const WebSnapshot* snapshot) : snapshot_(snapshot) {}

  std::optional<Page> fetch(const std::string& url) const override;
  bool has_host(const std::string& host) const override;
  std::vector<std::string> site_urls(const std::string& host) const override;
  std::int64_t clock() const override;

 private:
  const WebSnapshot* snapshot_;
};

// Wraps a fetcher and counts downloads; used for single-fetch checks and the
// pages_fetched experiment metrics.
class CountingFetcher : public Fetcher {
 public:
  explicit CountingFetcher(const Fetcher* inner) : inner_(inner) {}

  std::optional<Page> fetch(const std::string& url) const override;
  bool has_host(const std::string& host) const override { return inner_->has_host(host); }
  std::vector<std::string> site_urls(const std::string& host) const override {
    return inner_->site_urls(host);
  }
  std::int64_t clock() const override { return inner_->clock(); }

  std::int64_t fetch_calls() const { return fetch_calls_; }
  const std::map<std::string, int>& fetches_per_url() const { return per_url_; }
  void reset_counts() const;

 private:
  const Fetcher* inner_;
  mutable std::int64_t fetch_calls_ = 0;
  mutable std::map<std::string, int> per_url_;
};

}  // namespace dris

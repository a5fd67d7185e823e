#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dris/domain_name.hpp"
#include "dris/json_io.hpp"
#include "dris/web_model.hpp"

namespace dris {

// Evidence that pages on `citing_host` link to `target_url`. One entry per
// (target, citing site); the count is the number of distinct citing pages.
struct Citation {
  std::string target_url;
  std::string citing_host;
  int citing_page_count = 0;

  friend auto operator<=>(const Citation&, const Citation&) = default;
};

struct SiteCrawl {
  std::map<std::string, Page> pages;
  std::vector<Citation> citations;        // sorted by (target, citing_host)
  std::set<std::string> stop_targets;     // cross-host link targets
  std::vector<std::string> diagnostics;
};

// Result of crawling every site under one third-level domain. Cross-host
// link targets inside the domain stay native; targets outside it are
// downloaded once each into foreign_pages. Links found on foreign pages are
// never followed.
struct DomainCrawl {
  DomainName domain;
  std::map<std::string, Page> native_pages;
  std::map<std::string, Page> foreign_pages;
  std::vector<Citation> citations;  // sorted by (target, citing_host)
  std::int64_t crawl_tick = 0;
  std::vector<std::string> diagnostics;
};

// Enumerates the site and downloads each page once. Any outlink whose target
// host differs from `host` becomes a stop target: recorded as a citation,
// never traversed. An unknown host yields an empty result plus a diagnostic
// (the site may have been deleted between DNS listing and crawl).
SiteCrawl crawl_site(const Fetcher& fetcher, const std::string& host);

// Union of crawl_site over `hosts` (normally hosts_under(snapshot, domain)).
// Foreign stop targets are fetched at most once across the whole domain;
// targets that come back missing keep their citations but are dropped from
// foreign_pages.
DomainCrawl crawl_domain(const Fetcher& fetcher, const DomainName& domain,
                         const std::vector<std::string>& hosts);

Json crawl_report(const DomainCrawl& crawl);

}  // namespace dris

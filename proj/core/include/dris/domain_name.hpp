#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dris {

// A dotted DNS name as an ordered label list, leftmost label most specific:
// "cs.hust.edu.cn" -> ["cs","hust","edu","cn"]. Depth 1 names are countries,
// depth 2 second-level domains, depth 3 organization (third-level) domains.
class DomainName {
 public:
  DomainName() = default;
  // Validates labels; throws ParseError on an invalid label.
  explicit DomainName(std::vector<std::string> labels);

  static std::optional<DomainName> try_parse(std::string_view text);
  static DomainName parse(std::string_view text);  // throws ParseError

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t depth() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  std::string render() const;

  // True when this name ends with `ancestor`'s labels (equality included).
  bool under(const DomainName& ancestor) const;

  // Drop the most specific label: parent of "hust.edu.cn" is "edu.cn".
  DomainName parent() const;

  friend auto operator<=>(const DomainName&, const DomainName&) = default;

 private:
  std::vector<std::string> labels_;
};

// Labels are nonempty, lowercase [a-z0-9-], no leading or trailing hyphen.
bool valid_domain_label(std::string_view label);

}  // namespace dris

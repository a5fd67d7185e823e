#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dris/harvest.hpp"
#include "dris/json_io.hpp"
#include "dris/types.hpp"

namespace dris::wire {

inline constexpr int kDefaultDeadlineMs = 2000;

// One JSON object per request and per response. Ops:
//   {"op":"ListRecords","from":int|null,"token":string|null,"limit":int}
//   {"op":"Search","q":[terms],"k":int}            (tier 1 adds "m")
//   {"op":"Ping"}
// Responses are {"ok":true,...} or {"ok":false,"error":"..."}.

Json make_list_records_request(std::optional<std::int64_t> from,
                               const std::optional<std::string>& token, int limit);
Json make_search_request(const std::vector<std::string>& query, int k,
                         std::optional<int> per_child_limit = std::nullopt);
Json make_ping_request();

Json error_response(const std::string& code);
Json search_response_to_json(const SearchResponse& response);
SearchResponse search_response_from_json(const Json& value);  // throws ProtocolError on ok=false
Json list_page_to_json(const ListPage& page);
ListPage list_page_from_json(const Json& value);  // throws BadResumptionToken/ProtocolError

// A node's server side: handle one request, produce one response.
class Endpoint {
 public:
  virtual ~Endpoint() = default;
  virtual Json handle(const Json& request) = 0;
};

// Client side: deliver a request to a named endpoint. Throws TransportError
// when the endpoint cannot be reached.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual Json send(const std::string& endpoint_id, const Json& request,
                    int deadline_ms = kDefaultDeadlineMs) = 0;
};

// Direct dispatch within one process. A per-endpoint mutex keeps one message
// in flight per node, which is the concurrency contract of the parallel
// scheduling mode; sequential callers pay an uncontended lock.
class InProcessTransport : public Transport {
 public:
  using Observer = std::function<void(const std::string& endpoint_id, const Json& request)>;

  void add_route(const std::string& endpoint_id, Endpoint* endpoint);
  void set_down(const std::string& endpoint_id, bool down);
  bool is_down(const std::string& endpoint_id) const;

  // Test instrumentation: invoked before each dispatch.
  void set_observer(Observer observer) { observer_ = std::move(observer); }

  Json send(const std::string& endpoint_id, const Json& request,
            int deadline_ms = kDefaultDeadlineMs) override;

 private:
  struct Route {
    Endpoint* endpoint = nullptr;
    bool down = false;
    std::unique_ptr<std::mutex> in_flight = std::make_unique<std::mutex>();
  };

  std::map<std::string, Route> routes_;
  mutable std::mutex table_mutex_;
  Observer observer_;
};

}  // namespace dris::wire

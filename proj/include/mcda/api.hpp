#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcda/knowledge_base.hpp"
#include "mcda/rule_engine.hpp"
#include "mcda/uncertainty.hpp"
#include "mcda/validation.hpp"

namespace httplib {
class Server;
}

namespace mcda {

struct ApiRequest {
  std::string method = "GET";
  std::string path = "/";
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::map<std::string, std::string> headers;
};

struct ApiOptions {
  std::string allowed_origin = "*";
};

/// HTTP routes over one immutable KB. `handle` is a pure function of the
/// request; statistics for every level are computed in the constructor.
class ApiService {
 public:
  explicit ApiService(const KnowledgeBase& kb, std::optional<std::vector<ReferenceCase>> cases = {},
                      ApiOptions options = {});

  ApiResponse handle(const ApiRequest& request) const;

  /// Routes every request on `server` through handle().
  void mount(httplib::Server& server) const;

  const RuleEngine& engine() const noexcept { return engine_; }

 private:
  ApiResponse methods(const ApiRequest& request) const;
  ApiResponse select(const ApiRequest& request) const;
  ApiResponse rules(const ApiRequest& request) const;
  ApiResponse stats(const ApiRequest& request) const;
  ApiResponse validate() const;

  const KnowledgeBase* kb_;
  RuleEngine engine_;
  std::optional<std::vector<ReferenceCase>> cases_;
  ApiOptions options_;
  // [level - 1][include_empty]
  std::array<std::array<std::vector<StatsRow>, 2>, 3> stats_;
};

/// "host:port" or ":port" or "port". Throws ParseError.
std::pair<std::string, int> parse_bind_address(const std::string& address);

/// Blocks serving `service` until the server stops. Throws IoError when the
/// address cannot be bound.
void serve(const ApiService& service, const std::string& host, int port);

}  // namespace mcda

#include "mcda/api.hpp"

#include <httplib.h>

#include "mcda/errors.hpp"
#include "mcda/json_io.hpp"
#include "text.hpp"

namespace mcda {

namespace {

using Json = nlohmann::json;
namespace jio = mcda::json;

ApiResponse json_response(int status, const Json& body) {
  ApiResponse r;
  r.status = status;
  r.body = body.dump();
  return r;
}

ApiResponse error_response(int status, const std::string& message) {
  return json_response(status, {{"error", message}});
}

std::optional<std::string> query_value(const ApiRequest& request, const std::string& key) {
  const auto it = request.query.find(key);
  if (it == request.query.end()) return std::nullopt;
  return it->second;
}

std::optional<Level> query_level(const ApiRequest& request) {
  const auto raw = query_value(request, "level");
  if (!raw) return Level::Three;
  const auto n = text::parse_int(*raw);
  return n ? level_from_int(*n) : std::nullopt;
}

}  // namespace

ApiService::ApiService(const KnowledgeBase& kb, std::optional<std::vector<ReferenceCase>> cases,
                       ApiOptions options)
    : kb_(&kb), engine_(kb), cases_(std::move(cases)), options_(std::move(options)) {
  for (Level level : kAllLevels) {
    for (int include_empty = 0; include_empty < 2; ++include_empty) {
      stats_[to_int(level) - 1][include_empty] =
          compute_stats(engine_, level, include_empty != 0);
    }
  }
}

ApiResponse ApiService::handle(const ApiRequest& request) const {
  ApiResponse response;
  if (request.method == "OPTIONS") {
    response.status = 204;
  } else {
    struct Route {
      const char* path;
      const char* method;
    };
    static constexpr std::array<Route, 5> kRoutes{{{"/methods", "GET"},
                                                   {"/select", "POST"},
                                                   {"/rules", "GET"},
                                                   {"/stats", "GET"},
                                                   {"/validate", "GET"}}};
    const Route* route = nullptr;
    for (const auto& r : kRoutes) {
      if (request.path == r.path) route = &r;
    }
    if (!route) {
      response = error_response(404, "no route " + request.path);
    } else if (request.method != route->method) {
      response = error_response(405, request.method + " not allowed on " + request.path);
      response.headers["Allow"] = route->method;
    } else {
      try {
        if (request.path == "/methods") response = methods(request);
        if (request.path == "/select") response = select(request);
        if (request.path == "/rules") response = rules(request);
        if (request.path == "/stats") response = stats(request);
        if (request.path == "/validate") response = validate();
      } catch (const std::exception& e) {
        response = error_response(500, e.what());
      }
    }
  }
  response.headers["Content-Type"] = "application/json";
  response.headers["X-KB-Digest"] = kb_->content_digest();
  response.headers["Access-Control-Allow-Origin"] = options_.allowed_origin;
  response.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
  response.headers["Access-Control-Allow-Headers"] = "Content-Type";
  response.headers["Access-Control-Expose-Headers"] = "X-KB-Digest";
  return response;
}

ApiResponse ApiService::methods(const ApiRequest& request) const {
  const MethodRecord* hit = nullptr;
  if (const auto abbr = query_value(request, "abbr")) {
    hit = kb_->find(*abbr);
    if (!hit) return error_response(404, "no method with abbreviation '" + *abbr + "'");
  } else if (const auto id = query_value(request, "id")) {
    const auto n = text::parse_int(*id);
    if (!n) return error_response(400, "id must be an integer");
    hit = kb_->find(*n);
    if (!hit) return error_response(404, "no method with id " + *id);
  }
  Json out = Json::array();
  if (hit) {
    out.push_back(jio::method_detail(*hit));
  } else {
    for (const auto& rec : kb_->methods()) out.push_back(jio::method_detail(rec));
  }
  return json_response(200, out);
}

ApiResponse ApiService::select(const ApiRequest& request) const {
  Json body;
  try {
    body = request.body.empty() ? Json::object() : Json::parse(request.body);
  } catch (const Json::parse_error& e) {
    return error_response(400, std::string("malformed JSON: ") + e.what());
  }
  if (!body.is_object()) return error_response(400, "request body must be a JSON object");

  bool explain = false;
  DescriptorVector query;
  try {
    const bool envelope =
        body.contains("descriptors") || body.contains("problem") || body.contains("mode");
    if (envelope) {
      for (const auto& [key, value] : body.items()) {
        if (key != "descriptors" && key != "problem" && key != "mode") {
          throw ParseError("unknown request field '" + key + "'");
        }
      }
      if (body.contains("mode")) {
        const auto& mode = body["mode"];
        if (!mode.is_string() || (mode != "strict" && mode != "explain")) {
          throw ParseError("mode must be \"strict\" or \"explain\"");
        }
        explain = mode == "explain";
      }
      if (body.contains("descriptors") && body.contains("problem")) {
        throw ParseError("give either descriptors or problem, not both");
      }
      if (body.contains("problem")) {
        query = classify(jio::parse_problem(body["problem"]));
      } else if (body.contains("descriptors")) {
        query = jio::parse_descriptors(body["descriptors"]);
      }
    } else {
      query = jio::parse_descriptors(body);
    }
  } catch (const ParseError& e) {
    return error_response(400, e.what());
  } catch (const ValidationError& e) {
    return error_response(400, e.what());
  } catch (const ClassificationError& e) {
    return error_response(422, e.what());
  }

  try {
    return json_response(200, jio::selection(run_selection(engine_, query, explain), *kb_));
  } catch (const InvalidRequest& e) {
    return json_response(422, {{"error", e.what()}, {"step", e.step()}});
  }
}

ApiResponse ApiService::rules(const ApiRequest& request) const {
  const auto level = query_level(request);
  if (!level) return error_response(400, "level must be 1, 2 or 3");
  return json_response(200, jio::rules(engine_.rule_base(*level), *kb_));
}

ApiResponse ApiService::stats(const ApiRequest& request) const {
  const auto level = query_level(request);
  if (!level) return error_response(400, "level must be 1, 2 or 3");
  bool include_empty = false;
  if (const auto raw = query_value(request, "include_empty")) {
    if (*raw == "true" || *raw == "1") {
      include_empty = true;
    } else if (*raw != "false" && *raw != "0") {
      return error_response(400, "include_empty must be true or false");
    }
  }
  return json_response(200, jio::stats_rows(stats_[to_int(*level) - 1][include_empty ? 1 : 0]));
}

ApiResponse ApiService::validate() const {
  if (!cases_) return error_response(404, "no case corpus loaded");
  return json_response(200, jio::report(run_cases(engine_, *cases_)));
}

void ApiService::mount(httplib::Server& server) const {
  const auto adapter = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    request.body = req.body;
    const auto response = handle(request);
    res.status = response.status;
    for (const auto& [key, value] : response.headers) {
      if (key != "Content-Type") res.set_header(key, value);
    }
    if (response.status != 204) res.set_content(response.body, "application/json");
  };
  server.Get(".*", adapter);
  server.Post(".*", adapter);
  server.Options(".*", adapter);
  server.Put(".*", adapter);
  server.Delete(".*", adapter);
}

std::pair<std::string, int> parse_bind_address(const std::string& address) {
  std::string host = "127.0.0.1";
  std::string port_text = address;
  if (const auto colon = address.rfind(':'); colon != std::string::npos) {
    if (colon > 0) host = address.substr(0, colon);
    port_text = address.substr(colon + 1);
  }
  const auto port = text::parse_int(port_text);
  if (!port || *port < 0 || *port > 65535) {
    throw ParseError("bad bind address '" + address + "'");
  }
  return {host, *port};
}

void serve(const ApiService& service, const std::string& host, int port) {
  httplib::Server server;
  service.mount(server);
  if (!server.listen(host, port)) {
    throw IoError("cannot listen on " + host + ":" + std::to_string(port));
  }
}

}  // namespace mcda

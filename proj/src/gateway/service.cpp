#include "termheat/gateway/service.hpp"

#include <httplib.h>

#include "termheat/error.hpp"

namespace termheat::gateway {

struct Service::Impl {
  httplib::Server server;
};

Service::Service(ServiceConfig config, std::shared_ptr<const CoIndex> index)
    : config_(std::move(config)), holder_(std::move(index)), impl_(std::make_unique<Impl>()) {
  auto& server = impl_->server;

  auto route = [this, &server](const std::string& path, auto handler) {
    server.Get(path, [this, handler](const httplib::Request& req, httplib::Response& res) {
      const auto index = holder_.snapshot();
      ApiResponse response = handler(*index, req.params);
      res.status = response.status;
      res.set_content(response.body, "application/json");
    });
  };
  route("/api/recommend", [this](const CoIndex& index, const QueryParams& params) {
    return handle_recommend(index, params, config_);
  });
  route("/api/heatmap", [this](const CoIndex& index, const QueryParams& params) {
    return handle_heatmap(index, params, config_);
  });
  route("/api/documents", [this](const CoIndex& index, const QueryParams& params) {
    return handle_documents(index, params, config_);
  });
  route("/api/stats", [](const CoIndex& index, const QueryParams&) { return handle_stats(index); });

  if (config_.assets_dir) {
    if (!server.set_mount_point("/", config_.assets_dir->string()))
      throw Error(Errc::io_error, "assets directory not found: " + config_.assets_dir->string());
  } else {
    server.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("termheat API: /api/heatmap, /api/recommend, /api/documents, /api/stats\n",
                      "text/plain");
    });
  }
}

Service::~Service() { stop(); }

int Service::bind() {
  auto& server = impl_->server;
  if (config_.port == 0) return server.bind_to_any_port(config_.host);
  return server.bind_to_port(config_.host, config_.port) ? config_.port : -1;
}

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace termheat::gateway

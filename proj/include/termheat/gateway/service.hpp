#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "termheat/coindex.hpp"
#include "termheat/gateway/api.hpp"

namespace termheat::gateway {

/// The index currently served. A request takes one snapshot() and uses it to
/// the end, so it observes exactly one index version across a replace().
class IndexHolder {
 public:
  explicit IndexHolder(std::shared_ptr<const CoIndex> index) : index_(std::move(index)) {}

  std::shared_ptr<const CoIndex> snapshot() const {
    std::lock_guard lock(mutex_);
    return index_;
  }
  void replace(std::shared_ptr<const CoIndex> index) {
    std::lock_guard lock(mutex_);
    index_.swap(index);
  }

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const CoIndex> index_;
};

/// Read-only HTTP front end over IndexHolder.
class Service {
 public:
  Service(ServiceConfig config, std::shared_ptr<const CoIndex> index);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds config.host:config.port, or an ephemeral port when port is 0.
  /// Returns the bound port, or -1.
  int bind();
  /// Blocks until stop().
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

  void reload(std::shared_ptr<const CoIndex> index) { holder_.replace(std::move(index)); }
  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct Impl;
  ServiceConfig config_;
  IndexHolder holder_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace termheat::gateway

#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace edgeideals {

/// Sharded string-keyed memo table. Entries are idempotent (every writer
/// computes the same value for a key), so last-write-wins is safe.
template <typename V>
class ConcurrentCache {
 public:
  std::optional<V> find(const std::string& key) const {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, V value) {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mutex);
    s.map.insert_or_assign(key, std::move(value));
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mutex);
      total += s.map.size();
    }
    return total;
  }

 private:
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, V> map;
  };

  Shard& shard(const std::string& key) const {
    return shards_[std::hash<std::string>{}(key) % kShards];
  }

  static constexpr std::size_t kShards = 16;
  mutable Shard shards_[kShards];
};

}  // namespace edgeideals

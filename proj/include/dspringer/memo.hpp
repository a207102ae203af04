#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace dspringer {

/// Thread-safe memo table.  Two threads computing the same key race
/// harmlessly: values are deterministic and the first insert wins.
template <typename Key, typename Value>
class Memo {
 public:
  template <typename Fn>
  Value get(const Key& key, Fn compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace dspringer

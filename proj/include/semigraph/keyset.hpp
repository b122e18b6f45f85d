#pragma once

#include <optional>
#include <string>
#include <vector>

namespace semigraph {

/// Finite, duplicate-free, totally ordered set of string keys. The order is
/// lexicographic byte order; construction sorts and deduplicates.
class KeySet {
 public:
  KeySet() = default;
  static KeySet of(std::vector<std::string> keys);

  const std::vector<std::string>& keys() const { return keys_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  bool contains(const std::string& key) const;
  std::optional<std::size_t> rank(const std::string& key) const;

  bool operator==(const KeySet& o) const { return keys_ == o.keys_; }
  bool operator!=(const KeySet& o) const { return !(*this == o); }

  auto begin() const { return keys_.begin(); }
  auto end() const { return keys_.end(); }

 private:
  std::vector<std::string> keys_;  // strictly ascending
};

}  // namespace semigraph

#include "semigraph/keyset.hpp"

#include <algorithm>

namespace semigraph {

KeySet KeySet::of(std::vector<std::string> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  KeySet ks;
  ks.keys_ = std::move(keys);
  return ks;
}

bool KeySet::contains(const std::string& key) const {
  return std::binary_search(keys_.begin(), keys_.end(), key);
}

std::optional<std::size_t> KeySet::rank(const std::string& key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

}  // namespace semigraph

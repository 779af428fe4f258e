#include "qdrazin/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qdrazin/errors.hpp"

namespace qdrazin {

IndexSet::IndexSet(std::vector<std::size_t> elements, std::size_t ambient)
    : elements_(std::move(elements)), ambient_(ambient) {
  for (std::size_t t = 0; t < elements_.size(); ++t) {
    if (elements_[t] < 1 || elements_[t] > ambient_) {
      throw IndexOutOfRange("index " + std::to_string(elements_[t]) + " outside 1.." +
                            std::to_string(ambient_));
    }
    if (t > 0 && elements_[t - 1] >= elements_[t]) {
      throw InvalidOrder("index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::full(std::size_t ambient) {
  std::vector<std::size_t> all(ambient);
  std::iota(all.begin(), all.end(), std::size_t{1});
  return IndexSet(std::move(all), ambient);
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(elements_.begin(), elements_.end(), index);
}

std::size_t IndexSet::position_of(std::size_t index) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), index);
  if (it == elements_.end() || *it != index) {
    throw IndexOutOfRange("index " + std::to_string(index) + " not in index set");
  }
  return static_cast<std::size_t>(it - elements_.begin()) + 1;
}

std::vector<IndexSet> enumerate_index_sets(std::size_t n, std::size_t k,
                                           std::optional<std::size_t> anchor) {
  if (k > n) {
    throw InvalidOrder("order " + std::to_string(k) + " exceeds ambient size " +
                       std::to_string(n));
  }
  if (anchor && (*anchor < 1 || *anchor > n)) {
    throw IndexOutOfRange("anchor " + std::to_string(*anchor) + " outside 1.." +
                          std::to_string(n));
  }
  std::vector<IndexSet> out;
  if (anchor && k == 0) return out;
  out.reserve(anchor ? binomial(n - 1, k - 1) : binomial(n, k));

  // Odometer over combinations; current holds the next set in lex order.
  std::vector<std::size_t> current(k);
  std::iota(current.begin(), current.end(), std::size_t{1});
  while (true) {
    if (!anchor || std::binary_search(current.begin(), current.end(), *anchor)) {
      out.emplace_back(current, n);
    }
    std::size_t pos = k;
    while (pos > 0 && current[pos - 1] == n - k + pos) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t t = pos; t < k; ++t) current[t] = current[t - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

}  // namespace qdrazin

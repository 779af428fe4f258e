#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qdrazin {

/// Strictly increasing subset of {1..ambient}, used to pick principal
/// submatrices. Indices are 1-based.
class IndexSet {
 public:
  IndexSet(std::vector<std::size_t> elements, std::size_t ambient);

  static IndexSet full(std::size_t ambient);

  [[nodiscard]] const std::vector<std::size_t>& elements() const { return elements_; }
  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] bool empty() const { return elements_.empty(); }
  [[nodiscard]] std::size_t operator[](std::size_t pos) const { return elements_[pos]; }

  [[nodiscard]] bool contains(std::size_t index) const;
  /// 1-based position of `index` inside the set; throws IndexOutOfRange if
  /// absent.
  [[nodiscard]] std::size_t position_of(std::size_t index) const;

  [[nodiscard]] auto begin() const { return elements_.begin(); }
  [[nodiscard]] auto end() const { return elements_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> elements_;
  std::size_t ambient_;
};

/// All k-subsets of {1..n} in lexicographic order. With an anchor, only the
/// subsets containing it are produced. Throws InvalidOrder when k > n and
/// IndexOutOfRange for an anchor outside {1..n}.
std::vector<IndexSet> enumerate_index_sets(std::size_t n, std::size_t k,
                                           std::optional<std::size_t> anchor = std::nullopt);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace qdrazin

#pragma once

// Partitions, multipartitions and Young-diagram geometry.
//
// Row and column indices of nodes are 1-based, matching the usual drawing of
// a Young diagram; component indices inside a Multipartition are 0-based
// (std::vector convention) except in Node, where the component is 1-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mullineux/error.hpp"

namespace mullineux {

/// Weakly decreasing sequence of positive parts. Only nonzero parts are
/// stored; part(i) reads zero past the end.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped. Throws invalid_input if the parts are
  /// negative or not weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        fail(errc::invalid_input, "partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        fail(errc::invalid_input, "partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts into decreasing order and drops zeros.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int rank() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// 1-based row access; rows beyond the last nonzero part are 0.
  int part(std::size_t row) const noexcept {
    return (row >= 1 && row <= parts_.size()) ? parts_[row - 1] : 0;
  }

  const std::vector<int>& parts() const noexcept { return parts_; }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Sequence of l >= 1 partitions.
class Multipartition {
 public:
  Multipartition() : components_(1) {}

  explicit Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) fail(errc::invalid_parameter, "a multipartition needs level >= 1");
  }

  Multipartition(std::initializer_list<Partition> components)
      : Multipartition(std::vector<Partition>(components)) {}

  static Multipartition empty_of_level(std::size_t level) {
    return Multipartition(std::vector<Partition>(level));
  }

  std::size_t level() const noexcept { return components_.size(); }

  int rank() const noexcept {
    int r = 0;
    for (const auto& p : components_) r += p.rank();
    return r;
  }

  const Partition& operator[](std::size_t c) const { return components_.at(c); }
  const std::vector<Partition>& components() const noexcept { return components_; }

  Multipartition with_component(std::size_t c, Partition p) const {
    auto copy = components_;
    copy.at(c) = std::move(p);
    return Multipartition(std::move(copy));
  }

  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
  friend bool operator==(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

/// Node (row, col, component), all 1-based.
struct Node {
  int row = 1;
  int col = 1;
  int component = 1;

  friend auto operator<=>(const Node&, const Node&) = default;
};

inline bool is_e_regular(const Partition& lambda, int e) {
  require_e(e);
  const auto& p = lambda.parts();
  std::size_t run = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    run = (i > 0 && p[i] == p[i - 1]) ? run + 1 : 1;
    if (run >= static_cast<std::size_t>(e)) return false;
  }
  return true;
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int v : lambda.parts())
    for (int j = 0; j < v; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

/// Hook at (1,1) is the longest one.
inline int max_hook_length(const Partition& lambda) {
  if (lambda.empty()) return 0;
  return lambda.part(1) + static_cast<int>(lambda.length()) - 1;
}

/// All hooks shorter than e. Stronger than "no removable e-hook".
inline bool is_paper_e_core(const Partition& lambda, int e) {
  require_e(e);
  return max_hook_length(lambda) < e;
}

inline Partition concat(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts = lambda.parts();
  parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

inline int mod(long long value, int e) {
  long long r = value % e;
  return static_cast<int>(r < 0 ? r + e : r);
}

/// Residue (col - row + charge of the component) mod e of a node lying in mp.
inline int node_residue(const Multipartition& mp, const Node& node, std::span<const int> charge, int e) {
  require_e(e);
  if (charge.size() != mp.level())
    fail(errc::invalid_parameter, "charge level does not match the multipartition");
  if (node.component < 1 || static_cast<std::size_t>(node.component) > mp.level() || node.row < 1 ||
      node.col < 1 ||
      node.col > mp[static_cast<std::size_t>(node.component - 1)].part(static_cast<std::size_t>(node.row)))
    fail(errc::invalid_parameter, "node outside the Young diagram");
  return mod(node.col - node.row + charge[static_cast<std::size_t>(node.component - 1)], e);
}

inline int node_residue(const Partition& lambda, const Node& node, int charge, int e) {
  const int c[] = {charge};
  return node_residue(Multipartition{lambda}, node, c, e);
}

inline int first_column_length(const Partition& lambda) noexcept {
  return static_cast<int>(lambda.length());
}

inline Partition remove_first_column(const Partition& lambda) {
  std::vector<int> parts = lambda.parts();
  for (auto& p : parts) --p;
  return Partition(std::move(parts));
}

/// Adds one box to each of the first `height` rows.
inline Partition add_column(const Partition& lambda, int height) {
  std::vector<int> parts = lambda.parts();
  if (height < 0) fail(errc::invalid_parameter, "column height must be nonnegative");
  if (static_cast<std::size_t>(height) < parts.size())
    fail(errc::invalid_parameter, "column shorter than the partition it is added to");
  parts.resize(std::max(parts.size(), static_cast<std::size_t>(height)), 0);
  for (int i = 0; i < height; ++i) ++parts[static_cast<std::size_t>(i)];
  return Partition(std::move(parts));
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n, lexicographically decreasing.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) fail(errc::invalid_parameter, "n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::partitions_rec(n, n, prefix, out);
  return out;
}

inline std::vector<Partition> enumerate_e_regular(int n, int e) {
  require_e(e);
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (is_e_regular(p, e)) out.push_back(std::move(p));
  return out;
}

/// All l-partitions of n in lexicographically decreasing order.
inline std::vector<Multipartition> enumerate_multipartitions(int n, std::size_t level) {
  if (level == 0) fail(errc::invalid_parameter, "level must be at least 1");
  if (n < 0) fail(errc::invalid_parameter, "n must be nonnegative");
  std::vector<std::vector<Partition>> by_rank;
  for (int k = 0; k <= n; ++k) by_rank.push_back(enumerate_partitions(k));

  std::vector<Multipartition> out;
  std::vector<Partition> prefix;
  std::function<void(int)> rec = [&](int remaining) {
    if (prefix.size() + 1 == level) {
      for (const auto& p : by_rank[static_cast<std::size_t>(remaining)]) {
        prefix.push_back(p);
        out.emplace_back(prefix);
        prefix.pop_back();
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : by_rank[static_cast<std::size_t>(k)]) {
        prefix.push_back(p);
        rec(remaining - k);
        prefix.pop_back();
      }
    }
  };
  rec(n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace mullineux

#pragma once

// Segments of consecutive residues, aperiodicity, and the row map chi from
// charged multipartitions to multisegments with its inverse by search.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "mullineux/charges.hpp"
#include "mullineux/core.hpp"
#include "mullineux/crystal.hpp"
#include "mullineux/error.hpp"

namespace mullineux {

struct Segment {
  int head = 0;
  int length = 1;

  int tail(int e) const { return mod(static_cast<long long>(head) + length - 1, e); }

  /// Canonical order: longer first, then smaller head.
  friend bool operator<(const Segment& a, const Segment& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.head < b.head;
  }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Multiset of segments kept in canonical order.
class Multisegment {
 public:
  Multisegment() = default;

  explicit Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
    for (const auto& s : segments_)
      if (s.length < 1) fail(errc::invalid_input, "segment length must be at least 1");
    std::sort(segments_.begin(), segments_.end());
  }

  Multisegment(std::initializer_list<Segment> segments) : Multisegment(std::vector<Segment>(segments)) {}

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return segments_.size(); }
  bool empty() const noexcept { return segments_.empty(); }

  int length() const noexcept {
    int n = 0;
    for (const auto& s : segments_) n += s.length;
    return n;
  }

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend bool operator<(const Multisegment& a, const Multisegment& b) { return a.segments_ < b.segments_; }

 private:
  std::vector<Segment> segments_;
};

/// Every length present misses at least one tail residue.
inline bool is_aperiodic(const Multisegment& psi, int e) {
  require_e(e);
  std::map<int, std::vector<bool>> tails;
  for (const auto& s : psi.segments()) {
    auto& row = tails[s.length];
    row.resize(static_cast<std::size_t>(e), false);
    row[static_cast<std::size_t>(s.tail(e))] = true;
  }
  for (const auto& [len, row] : tails)
    if (std::all_of(row.begin(), row.end(), [](bool b) { return b; })) return false;
  return true;
}

/// Row segments read off directly: part i of component c starts at 1 - i + s_c.
inline Multisegment segments_of_rows(const Multipartition& mp, const Multicharge& s, int e) {
  require_e(e);
  if (mp.level() != s.level()) fail(errc::invalid_parameter, "charge level does not match the multipartition");
  std::vector<Segment> out;
  for (std::size_t c = 0; c < mp.level(); ++c)
    for (std::size_t i = 1; i <= mp[c].length(); ++i)
      out.push_back({mod(1 - static_cast<long long>(i) + s[c], e), mp[c].part(i)});
  return Multisegment(std::move(out));
}

/// At a non-fundamental charge the label is first moved to the fundamental
/// representative.
inline Multisegment chi(const ChargedMultipartition& cm) {
  if (is_fundamental(cm.charge, cm.e)) return segments_of_rows(cm.mp, cm.charge, cm.e);
  const auto there = psi(cm, fundamental_representative(cm.charge, cm.e));
  return segments_of_rows(there.mp, there.charge, there.e);
}

inline Multisegment chi(const Partition& lambda, int charge, int e) {
  return segments_of_rows(Multipartition{lambda}, Multicharge{charge}, e);
}

namespace detail {

class ChiSearch {
 public:
  ChiSearch(const Multisegment& psi, const Multicharge& s, int e) : s_(s), e_(e) {
    for (const auto& seg : psi.segments()) ++pool_[{seg.head, seg.length}];
    remaining_ = static_cast<int>(psi.size());
    rows_.resize(s.level());
  }

  std::vector<Multipartition> run() {
    dfs(0, 1, -1);
    return found_;
  }

 private:
  // Row i of component c, previous part `cap` (-1 for none yet).
  void dfs(std::size_t c, int i, int cap) {
    if (found_.size() > 1) return;
    if (c == s_.level()) {
      if (remaining_ != 0) return;
      std::vector<Partition> comps;
      for (const auto& r : rows_) comps.emplace_back(r);
      Multipartition mp(std::move(comps));
      if (flotw_check({mp, s_, e_})) found_.push_back(std::move(mp));
      return;
    }
    if (remaining_ > 0) {
      const int head = mod(1 - static_cast<long long>(i) + s_[c], e_);
      // Condition (1) against the finished component c - 1.
      int bound = cap;
      if (c > 0) {
        const int gap = s_[c] - s_[c - 1];
        const int above = i - gap;
        if (above >= 1) {
          const auto& prev = rows_[c - 1];
          const int v = above <= static_cast<int>(prev.size()) ? prev[static_cast<std::size_t>(above - 1)] : 0;
          bound = bound < 0 ? v : std::min(bound, v);
        }
      }
      for (auto it = pool_.begin(); it != pool_.end(); ++it) {
        const auto [h, len] = it->first;
        if (h != head || it->second == 0) continue;
        if (bound >= 0 && len > bound) continue;
        --it->second;
        --remaining_;
        rows_[c].push_back(len);
        dfs(c, i + 1, len);
        rows_[c].pop_back();
        ++remaining_;
        ++it->second;
      }
    }
    dfs(c + 1, 1, -1);
  }

  Multicharge s_;
  int e_;
  std::map<std::pair<int, int>, int> pool_;
  int remaining_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<Multipartition> found_;
};

}  // namespace detail

inline std::optional<Multipartition> try_chi_inverse(const Multisegment& psi, const Multicharge& s, int e) {
  require_e(e);
  if (!is_fundamental(s, e)) fail(errc::invalid_parameter, "chi_inverse needs a fundamental charge");
  auto found = detail::ChiSearch(psi, s, e).run();
  if (found.empty()) return std::nullopt;
  if (found.size() > 1) fail(errc::internal_consistency, "two FLOTW preimages for one multisegment");
  if (segments_of_rows(found.front(), s, e) != psi)
    fail(errc::internal_consistency, "chi_inverse round trip failed");
  return found.front();
}

/// Unique FLOTW preimage at the fundamental charge s.
inline Multipartition chi_inverse(const Multisegment& psi, const Multicharge& s, int e) {
  auto mp = try_chi_inverse(psi, s, e);
  if (!mp) fail(errc::not_admissible, "no FLOTW preimage at this charge");
  return *mp;
}

/// Preimage found by search at the fundamental representative of t.
inline bool is_admissible(const Multisegment& psi, const Multicharge& t, int e) {
  return try_chi_inverse(psi, fundamental_representative(t, e), e).has_value();
}

/// With a charge s already known to be admissible for psi.
inline bool is_admissible(const Multisegment& psi, const Multicharge& t, int e, const Multicharge& known) {
  (void)psi;
  return contains(known, t, e);
}

}  // namespace mullineux

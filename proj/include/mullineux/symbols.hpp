#pragma once

// Two-row symbols of charged bipartitions and the row-matching procedure that
// realises the sigma_1 crystal isomorphism.

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "mullineux/core.hpp"
#include "mullineux/error.hpp"

namespace mullineux {

/// Rows of beta-numbers, both stored increasing. row1 encodes component 1
/// (charge1), row2 component 2 (charge2). The row of a component with charge
/// c has depth + c - max(charge1, charge2) entries.
struct Symbol {
  int charge1 = 0;
  int charge2 = 0;
  int depth = 0;
  std::vector<int> row1;
  std::vector<int> row2;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

using Bipartition = std::pair<Partition, Partition>;

namespace detail {

inline std::vector<int> beta_row(const Partition& p, int charge, int len) {
  std::vector<int> row(static_cast<std::size_t>(len));
  // Position j from the right holds part_j - j + charge.
  for (int j = 1; j <= len; ++j)
    row[static_cast<std::size_t>(len - j)] = p.part(static_cast<std::size_t>(j)) - j + charge;
  return row;
}

inline Partition decode_row(const std::vector<int>& row, int charge) {
  const int len = static_cast<int>(row.size());
  std::vector<int> parts(static_cast<std::size_t>(len));
  for (int j = 1; j <= len; ++j) {
    const int v = row[static_cast<std::size_t>(len - j)] + j - charge;
    if (v < 0) fail(errc::malformed_symbol, "symbol decodes to a negative part");
    if (j > 1 && v > parts[static_cast<std::size_t>(j - 2)])
      fail(errc::malformed_symbol, "symbol row is not strictly increasing");
    parts[static_cast<std::size_t>(j - 1)] = v;
  }
  return Partition(std::move(parts));
}

}  // namespace detail

/// Symbol with the least admissible depth.
inline Symbol build_symbol(const Partition& first, const Partition& second, int charge1, int charge2) {
  const int top = std::max(charge1, charge2);
  int depth = std::abs(charge1 - charge2);
  depth = std::max(depth, static_cast<int>(first.length()) - charge1 + top);
  depth = std::max(depth, static_cast<int>(second.length()) - charge2 + top);
  Symbol sym{charge1, charge2, depth, {}, {}};
  sym.row1 = detail::beta_row(first, charge1, depth + charge1 - top);
  sym.row2 = detail::beta_row(second, charge2, depth + charge2 - top);
  return sym;
}

inline Symbol build_symbol(const Bipartition& bp, int charge1, int charge2) {
  return build_symbol(bp.first, bp.second, charge1, charge2);
}

/// Same bipartition, `extra` more leading entries in each row.
inline Symbol pad_symbol(const Symbol& sym, int extra) {
  const int top = std::max(sym.charge1, sym.charge2);
  const int d = sym.depth + extra;
  Symbol out = sym;
  out.depth = d;
  auto extend = [&](std::vector<int>& row, int charge) {
    const int len = d + charge - top;
    std::vector<int> head;
    for (int j = len; j > static_cast<int>(row.size()); --j) head.push_back(charge - j);
    row.insert(row.begin(), head.begin(), head.end());
  };
  extend(out.row1, sym.charge1);
  extend(out.row2, sym.charge2);
  return out;
}

inline Bipartition decode_symbol(const Symbol& sym) {
  const int top = std::max(sym.charge1, sym.charge2);
  if (static_cast<int>(sym.row1.size()) != sym.depth + sym.charge1 - top ||
      static_cast<int>(sym.row2.size()) != sym.depth + sym.charge2 - top)
    fail(errc::malformed_symbol, "row lengths do not match the depth");
  return {detail::decode_row(sym.row1, sym.charge1), detail::decode_row(sym.row2, sym.charge2)};
}

/// One application of the matching procedure; the result is the symbol of
/// the image bipartition at the swapped charge (charge2, charge1), at the
/// same depth.
inline Symbol match_step(const Symbol& sym) {
  const bool first_shorter = sym.charge2 >= sym.charge1;
  const std::vector<int>& shorter = first_shorter ? sym.row1 : sym.row2;
  std::vector<int> pool = first_shorter ? sym.row2 : sym.row1;  // sorted increasing
  if (shorter.size() > pool.size()) fail(errc::malformed_symbol, "shorter row is longer");

  std::vector<int> selected;
  for (int x : shorter) {  // increasing order: x is the minimum of what remains
    std::vector<int>::iterator pick;
    if (first_shorter) {
      // max{z <= x}, or max of the pool when every z exceeds x.
      auto it = std::upper_bound(pool.begin(), pool.end(), x);
      pick = (it == pool.begin()) ? pool.end() - 1 : it - 1;
    } else {
      // min{z >= x}, or min of the pool when every z is below x.
      auto it = std::lower_bound(pool.begin(), pool.end(), x);
      pick = (it == pool.end()) ? pool.begin() : it;
    }
    selected.push_back(*pick);
    pool.erase(pick);
  }
  std::sort(selected.begin(), selected.end());
  pool.insert(pool.end(), shorter.begin(), shorter.end());
  std::sort(pool.begin(), pool.end());

  Symbol out;
  out.charge1 = sym.charge2;
  out.charge2 = sym.charge1;
  out.depth = sym.depth;
  if (first_shorter) {
    out.row2 = std::move(selected);
    out.row1 = std::move(pool);
  } else {
    out.row1 = std::move(selected);
    out.row2 = std::move(pool);
  }
  return out;
}

}  // namespace mullineux

#pragma once

// Plain-text forms used by the command line:
//   partition     8,8,6 or - for the empty partition
//   multipartition partitions joined by |
//   multicharge   0,1,4
//   multisegment  head:length items joined by ; (or - when empty); an item
//                 may also be a run of residues such as 1,2,0

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "mullineux/charges.hpp"
#include "mullineux/core.hpp"
#include "mullineux/error.hpp"
#include "mullineux/multisegments.hpp"
#include "mullineux/symbols.hpp"

namespace mullineux::text {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(errc::invalid_input, "not an integer: '" + std::string(s) + "'");
  return v;
}

inline std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  for (auto item : split(s, ',')) out.push_back(parse_int(item));
  return out;
}

template <class Range, class F>
std::string join(const Range& r, std::string_view sep, F&& f) {
  std::string out;
  bool first = true;
  for (const auto& x : r) {
    if (!first) out += sep;
    first = false;
    out += f(x);
  }
  return out;
}

}  // namespace detail

inline Partition parse_partition(std::string_view s) {
  s = detail::trim(s);
  if (s == "-" || s.empty()) return {};
  auto parts = detail::parse_ints(s);
  for (int p : parts)
    if (p <= 0) fail(errc::invalid_input, "partition parts must be positive");
  return Partition(std::move(parts));
}

inline std::string format(const Partition& p) {
  if (p.empty()) return "-";
  return detail::join(p.parts(), ",", [](int v) { return std::to_string(v); });
}

inline Multipartition parse_multipartition(std::string_view s) {
  std::vector<Partition> comps;
  for (auto item : detail::split(detail::trim(s), '|')) comps.push_back(parse_partition(item));
  return Multipartition(std::move(comps));
}

inline std::string format(const Multipartition& mp) {
  return detail::join(mp.components(), "|", [](const Partition& p) { return format(p); });
}

inline std::string format(const Bipartition& bp) { return format(bp.first) + "|" + format(bp.second); }

inline Multicharge parse_charge(std::string_view s) {
  s = detail::trim(s);
  if (s.empty()) fail(errc::invalid_input, "empty multicharge");
  return Multicharge(detail::parse_ints(s));
}

inline std::string format(const Multicharge& s) {
  return detail::join(s.entries(), ",", [](int v) { return std::to_string(v); });
}

inline Segment parse_segment(std::string_view item, int e) {
  require_e(e);
  item = detail::trim(item);
  const auto colon = item.find(':');
  if (colon != std::string_view::npos) {
    const int head = detail::parse_int(item.substr(0, colon));
    const int len = detail::parse_int(item.substr(colon + 1));
    if (len < 1) fail(errc::invalid_input, "segment length must be at least 1");
    return {mod(head, e), len};
  }
  const auto residues = detail::parse_ints(item);
  for (std::size_t i = 1; i < residues.size(); ++i)
    if (mod(residues[i] - residues[i - 1] - 1, e) != 0)
      fail(errc::invalid_input, "segment residues are not consecutive: '" + std::string(item) + "'");
  return {mod(residues.front(), e), static_cast<int>(residues.size())};
}

inline Multisegment parse_multisegment(std::string_view s, int e) {
  s = detail::trim(s);
  if (s == "-" || s.empty()) return {};
  std::vector<Segment> segs;
  for (auto item : detail::split(s, ';')) segs.push_back(parse_segment(item, e));
  return Multisegment(std::move(segs));
}

inline std::string format(const Multisegment& m) {
  if (m.empty()) return "-";
  return detail::join(m.segments(), ";",
                      [](const Segment& g) { return std::to_string(g.head) + ":" + std::to_string(g.length); });
}

/// Residue-list form, e.g. [0]+[2,0,1,2,0,1].
inline std::string format_residues(const Multisegment& m, int e) {
  if (m.empty()) return "-";
  return detail::join(m.segments(), "+", [e](const Segment& g) {
    std::string out = "[";
    for (int k = 0; k < g.length; ++k) {
      if (k) out += ",";
      out += std::to_string(mod(static_cast<long long>(g.head) + k, e));
    }
    return out + "]";
  });
}

inline std::string format(const Symbol& sym) {
  auto row = [](const std::vector<int>& r) {
    return detail::join(r, " ", [](int v) { return std::to_string(v); });
  };
  return row(sym.row2) + " / " + row(sym.row1);
}

}  // namespace mullineux::text

#pragma once

// Crystal isomorphisms between Uglov label sets, FLOTW membership, and the
// row-moving fast paths for the l = 2 lift to a very dominant charge.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mullineux/charges.hpp"
#include "mullineux/core.hpp"
#include "mullineux/error.hpp"
#include "mullineux/symbols.hpp"

namespace mullineux {

struct ChargedMultipartition {
  Multipartition mp;
  Multicharge charge;
  int e = 2;

  ChargedMultipartition(Multipartition m, Multicharge s, int e_) : mp(std::move(m)), charge(std::move(s)), e(e_) {
    require_e(e);
    if (mp.level() != charge.level())
      fail(errc::invalid_parameter, "multipartition and charge have different levels");
  }

  int rank() const noexcept { return mp.rank(); }
  std::size_t level() const noexcept { return mp.level(); }

  friend bool operator==(const ChargedMultipartition&, const ChargedMultipartition&) = default;
};

/// The three FLOTW conditions. Only meaningful at fundamental charges.
inline bool flotw_check(const ChargedMultipartition& cm) {
  const auto& s = cm.charge;
  const int e = cm.e;
  if (!is_fundamental(s, e)) fail(errc::invalid_parameter, "flotw_check needs a fundamental charge");
  const std::size_t l = cm.level();
  std::size_t rows = 0;
  for (const auto& p : cm.mp.components()) rows = std::max(rows, p.length());

  for (std::size_t j = 0; j + 1 < l; ++j) {
    const auto gap = static_cast<std::size_t>(s[j + 1] - s[j]);
    for (std::size_t i = 1; i <= rows; ++i)
      if (cm.mp[j].part(i) < cm.mp[j + 1].part(i + gap)) return false;
  }
  const auto wrap = static_cast<std::size_t>(e + s[0] - s[l - 1]);
  for (std::size_t i = 1; i <= rows; ++i)
    if (cm.mp[l - 1].part(i) < cm.mp[0].part(i + wrap)) return false;

  // For each part size k the residues of the rightmost boxes miss some class.
  std::vector<std::vector<bool>> seen;
  for (std::size_t j = 0; j < l; ++j) {
    const auto& p = cm.mp[j];
    for (std::size_t i = 1; i <= p.length(); ++i) {
      const int k = p.part(i);
      if (seen.size() <= static_cast<std::size_t>(k)) seen.resize(static_cast<std::size_t>(k) + 1);
      auto& row = seen[static_cast<std::size_t>(k)];
      row.resize(static_cast<std::size_t>(e), false);
      row[static_cast<std::size_t>(mod(k - static_cast<long long>(i) + s[j], e))] = true;
    }
  }
  for (const auto& row : seen)
    if (!row.empty() && std::all_of(row.begin(), row.end(), [](bool b) { return b; })) return false;
  return true;
}

/// Matching procedure on components c, c+1 (c is 1-based).
inline ChargedMultipartition psi_sigma(const ChargedMultipartition& cm, int c) {
  const Multicharge target = act_sigma(cm.charge, c);
  const auto i = static_cast<std::size_t>(c - 1);
  const Symbol image = match_step(build_symbol(cm.mp[i], cm.mp[i + 1], cm.charge[i], cm.charge[i + 1]));
  auto [a, b] = decode_symbol(image);
  auto comps = cm.mp.components();
  comps[i] = std::move(a);
  comps[i + 1] = std::move(b);
  return {Multipartition(std::move(comps)), target, cm.e};
}

inline ChargedMultipartition psi_tau(const ChargedMultipartition& cm) {
  auto comps = cm.mp.components();
  std::rotate(comps.begin(), comps.begin() + 1, comps.end());
  return {Multipartition(std::move(comps)), act_tau(cm.charge, cm.e), cm.e};
}

inline ChargedMultipartition psi_tau_inv(const ChargedMultipartition& cm) {
  auto comps = cm.mp.components();
  std::rotate(comps.rbegin(), comps.rbegin() + 1, comps.rend());
  return {Multipartition(std::move(comps)), act_tau_inv(cm.charge, cm.e), cm.e};
}

inline ChargedMultipartition psi_step(const ChargedMultipartition& cm, const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::sigma: return psi_sigma(cm, g.index);
    case GeneratorKind::tau: return psi_tau(cm);
    case GeneratorKind::tau_inv: return psi_tau_inv(cm);
  }
  return cm;
}

inline ChargedMultipartition psi_along(ChargedMultipartition cm, const GeneratorWord& word) {
  for (const auto& g : word) cm = psi_step(cm, g);
  return cm;
}

/// (s1, s2) -> (s1, s2 + e).
inline ChargedMultipartition psi_shift_up(const ChargedMultipartition& cm) {
  if (cm.level() != 2) fail(errc::invalid_parameter, "psi_shift_up is defined for level 2");
  if (cm.charge[0] > cm.charge[1]) fail(errc::invalid_parameter, "psi_shift_up needs s1 <= s2");
  return psi_tau(psi_sigma(cm, 1));
}

/// (s1, s2) -> (s1, s2 - e).
inline ChargedMultipartition psi_shift_down(const ChargedMultipartition& cm) {
  if (cm.level() != 2) fail(errc::invalid_parameter, "psi_shift_down is defined for level 2");
  if (cm.charge[1] - cm.e < cm.charge[0]) fail(errc::invalid_parameter, "psi_shift_down needs s2 - e >= s1");
  return psi_sigma(psi_tau_inv(cm), 1);
}

inline ChargedMultipartition psi(const ChargedMultipartition& cm, const Multicharge& target) {
  if (target.level() != cm.level()) fail(errc::no_path, "target charge has a different level");
  return psi_along(cm, path_word(cm.charge, target, cm.e));
}

/// Uglov membership at any charge: FLOTW at the fundamental representative
/// after transport, and the transport must invert back to the input.
inline bool membership(const ChargedMultipartition& cm) {
  if (is_fundamental(cm.charge, cm.e)) return flotw_check(cm);
  const Multicharge f = fundamental_representative(cm.charge, cm.e);
  try {
    const auto there = psi(cm, f);
    if (!flotw_check(there)) return false;
    return psi(there, cm.charge).mp == cm.mp;
  } catch (const error& err) {
    if (err.code() == errc::malformed_symbol) return false;
    throw;
  }
}

/// Uglov labels of rank n at charge s, lexicographically decreasing.
inline std::vector<Multipartition> enumerate_phi(int e, const Multicharge& s, int n) {
  require_e(e);
  const Multicharge f = fundamental_representative(s, e);
  std::vector<Multipartition> out;
  for (auto& mp : enumerate_multipartitions(n, s.level())) {
    ChargedMultipartition cm{mp, f, e};
    if (!flotw_check(cm)) continue;
    out.push_back(f == s ? std::move(mp) : psi(cm, s).mp);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Smallest k >= 1 making (s1, s2 + k e) very dominant for rank n.
inline int minimal_very_dominant_k(int s1, int s2, int n, int e) {
  require_e(e);
  int k = 1;
  while (s2 + k * e - s1 <= n - 1) ++k;
  return k;
}

namespace detail {

// A row of a component tracked by its beta-number; base is the content of
// the (empty) column 0 of that row, so length = beta - base.
struct BetaRow {
  int beta;
  int base;
};

inline Partition rows_to_partition(const std::vector<BetaRow>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(r.beta - r.base);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

inline std::vector<BetaRow> beta_rows(const Partition& p, int charge, std::size_t count) {
  std::vector<BetaRow> rows;
  for (std::size_t j = 1; j <= count; ++j) {
    const int base = charge - static_cast<int>(j);
    rows.push_back({base + p.part(j), base});
  }
  return rows;
}

inline std::size_t padding_rows(std::size_t used, std::size_t upper, int k, int e, int n) {
  return used + upper + static_cast<std::size_t>((k + 2) * e + n + 2);
}

}  // namespace detail

/// Row-moving form of psi(theta_l2(lambda, e, s), (0, s + k e)): the first
/// e - s rows sit at charge 0 and the remaining rows at charge s; each round
/// moves truncated rows down and raises the lower contents by e.
inline Bipartition blockwise_lift(const Partition& lambda, int e, int s) {
  require_e(e);
  if (s <= 0 || s >= e) fail(errc::invalid_parameter, "blockwise_lift needs 0 < s < e");
  if (!is_e_regular(lambda, e)) fail(errc::invalid_input, "blockwise_lift needs an e-regular partition");
  const auto upper_rows = static_cast<std::size_t>(e - s);
  const int n = lambda.rank();
  std::vector<int> upper_parts, lower_parts;
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    (i <= upper_rows ? upper_parts : lower_parts).push_back(lambda.part(i));

  auto upper = detail::beta_rows(Partition(upper_parts), 0, upper_rows);
  const int k = minimal_very_dominant_k(0, s, n, e);
  // Empty rows reach below every upper beta-number even after k raises.
  auto lower = detail::beta_rows(Partition(lower_parts), s,
                                 detail::padding_rows(lower_parts.size(), upper_rows, k, e, n));

  for (int round = 0; round < k; ++round) {
    for (auto& row : upper) {
      // Lower row with the greatest beta not above this row's beta.
      auto best = lower.end();
      for (auto it = lower.begin(); it != lower.end(); ++it)
        if (it->beta <= row.beta && (best == lower.end() || it->beta > best->beta)) best = it;
      if (best == lower.end()) fail(errc::internal_consistency, "blockwise_lift ran out of rows");
      std::swap(row.beta, best->beta);
    }
    for (auto& row : lower) {
      row.beta += e;
      row.base += e;
    }
  }
  return {detail::rows_to_partition(upper), detail::rows_to_partition(lower)};
}

/// Reverse row-moving process: from (nu1, nu2) at (0, -s + k e), lowering
/// the second charge by e each round until it reaches (0, e - s).
inline Bipartition blockwise_lower(const Bipartition& bp, int e, int s) {
  require_e(e);
  if (s <= 0 || s >= e) fail(errc::invalid_parameter, "blockwise_lower needs 0 < s < e");
  const int n = bp.first.rank() + bp.second.rank();
  const int k = minimal_very_dominant_k(0, -s, n, e);
  // Empty rows on both sides, the lower ones reaching at least as deep.
  const auto upper_rows = bp.first.length() + static_cast<std::size_t>(n + e + 2);
  auto upper = detail::beta_rows(bp.first, 0, upper_rows);
  auto lower = detail::beta_rows(bp.second, -s + k * e,
                                 detail::padding_rows(bp.second.length(), upper_rows, k, e, n));

  for (int round = 0; round + 1 < k; ++round) {
    for (auto& row : lower) {
      row.beta -= e;
      row.base -= e;
    }
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
      // Lower row with the least beta not below this row's beta.
      auto best = lower.end();
      for (auto jt = lower.begin(); jt != lower.end(); ++jt)
        if (jt->beta >= it->beta && (best == lower.end() || jt->beta < best->beta)) best = jt;
      if (best != lower.end()) std::swap(it->beta, best->beta);
    }
  }
  return {detail::rows_to_partition(upper), detail::rows_to_partition(lower)};
}

}  // namespace mullineux

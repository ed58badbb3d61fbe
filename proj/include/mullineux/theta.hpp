#pragma once

// The embedding theta of e-regular partitions into FLOTW multipartitions.

#include <cstddef>
#include <vector>

#include "mullineux/charges.hpp"
#include "mullineux/core.hpp"
#include "mullineux/error.hpp"
#include "mullineux/symbols.hpp"

namespace mullineux {

namespace detail {

inline std::vector<Partition> theta_rec(const std::vector<int>& parts, std::size_t from, int e,
                                        const std::vector<int>& s) {
  const std::size_t l = s.size();
  if (from >= parts.size()) return std::vector<Partition>(l);

  std::size_t lp = 0;  // 0-based index of the first entry equal to s_l
  while (s[lp] != s[l - 1]) ++lp;

  std::vector<int> next;
  if (lp == 0) {
    next = s;
  } else {
    next.assign(l - lp + 1, s[l - 1]);
    for (std::size_t j = 1; j < lp; ++j) next.push_back(s[j] + e);
  }

  const auto take = static_cast<std::size_t>(e + s[0] - s[l - 1]);
  const std::size_t stop = std::min(parts.size(), from + take);
  const std::vector<int> head(parts.begin() + static_cast<std::ptrdiff_t>(from),
                              parts.begin() + static_cast<std::ptrdiff_t>(stop));
  const auto nu = theta_rec(parts, stop, e, next);

  std::vector<Partition> out(l);
  auto glue = [&](const Partition& tail) {
    std::vector<int> v = head;
    v.insert(v.end(), tail.parts().begin(), tail.parts().end());
    return Partition(std::move(v));
  };
  if (lp == 0) {
    out[0] = glue(nu[l - 1]);
    for (std::size_t j = 1; j < l; ++j) out[j] = nu[j - 1];
  } else {
    // 1-based: lambda^1 takes nu^{2+l-l'}, lambda^j takes nu^{(j+1-l') mod l}.
    const std::size_t l1 = lp + 1;
    out[0] = glue(nu[(2 + l - l1 - 1) % l]);
    for (std::size_t j = 2; j <= l; ++j) out[j - 1] = nu[(j + 1 + l - l1 - 1) % l];
  }
  return out;
}

}  // namespace detail

inline Multipartition theta(const Partition& lambda, int e, const Multicharge& s) {
  require_e(e);
  if (!is_fundamental(s, e)) fail(errc::invalid_parameter, "theta needs a fundamental charge");
  if (!is_e_regular(lambda, e)) fail(errc::invalid_input, "theta needs an e-regular partition");
  return Multipartition(detail::theta_rec(lambda.parts(), 0, e, s.entries()));
}

/// Block form at (0, s): e - s parts to the first component, then blocks of
/// e parts alternating between the second and the first.
inline Bipartition theta_l2(const Partition& lambda, int e, int s) {
  require_e(e);
  if (s < 0 || s >= e) fail(errc::invalid_parameter, "theta_l2 needs 0 <= s < e");
  if (!is_e_regular(lambda, e)) fail(errc::invalid_input, "theta_l2 needs an e-regular partition");
  std::vector<int> first, second;
  const auto& p = lambda.parts();
  const auto lead = static_cast<std::size_t>(e - s);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i < lead) {
      first.push_back(p[i]);
      continue;
    }
    const std::size_t block = (i - lead) / static_cast<std::size_t>(e);
    (block % 2 == 0 ? second : first).push_back(p[i]);
  }
  return {Partition(std::move(first)), Partition(std::move(second))};
}

inline Partition theta_inverse(const Multipartition& mp) {
  std::vector<int> parts;
  for (const auto& c : mp.components()) parts.insert(parts.end(), c.parts().begin(), c.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

inline Partition theta_inverse(const Bipartition& bp) { return concat(bp.first, bp.second); }

}  // namespace mullineux

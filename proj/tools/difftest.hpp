#pragma once

// Exhaustive property sweep over e-regular partitions, fanned out over
// worker threads and merged in input order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mullineux.hpp"

namespace mullineux::cli {

struct PropertyTally {
  long checked = 0;
  long failed = 0;
  std::optional<std::string> counterexample;  // smallest input in sweep order
};

using Tallies = std::map<std::string, PropertyTally>;

struct DifftestReport {
  int e_lo = 2;
  int e_hi = 2;
  int max_n = 0;
  long inputs = 0;
  Tallies properties;

  bool passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const auto& kv) { return kv.second.failed == 0; });
  }
};

namespace detail {

struct Item {
  int e;
  Partition lambda;
};

class Recorder {
 public:
  explicit Recorder(Tallies& t) : t_(t) {}

  void check(const std::string& name, bool ok, const std::string& where) {
    auto& p = t_[name];
    ++p.checked;
    if (!ok) {
      ++p.failed;
      if (!p.counterexample) p.counterexample = where;
    }
  }

  // Exceptions count as failures of the property being evaluated.
  template <class F>
  void guard(const std::string& name, const std::string& where, F&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    check(name, ok, where);
  }

 private:
  Tallies& t_;
};

inline Bipartition lift(const Bipartition& bp, int e, int s, int k) {
  const auto out = psi({Multipartition{bp.first, bp.second}, Multicharge{0, s}, e}, Multicharge{0, s + k * e}).mp;
  return {out[0], out[1]};
}

inline std::vector<Multicharge> fundamental_charges_from_zero(int e, std::size_t level) {
  std::vector<Multicharge> out;
  std::vector<int> cur{0};
  auto rec = [&](auto& self) -> void {
    if (cur.size() == level) {
      out.emplace_back(cur);
      return;
    }
    for (int v = cur.back(); v < e; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline void run_item(const Item& item, Tallies& tallies) {
  Recorder rec(tallies);
  const int e = item.e;
  const Partition& lambda = item.lambda;
  const int n = lambda.rank();
  const std::string base = "e=" + std::to_string(e) + " lambda=" + text::format(lambda);

  const Partition via_xu = xu(lambda, e);
  rec.guard("method-agreement", base, [&] { return kleshchev_oracle(lambda, e) == via_xu; });
  rec.check("rank-and-regularity", via_xu.rank() == n && is_e_regular(via_xu, e), base);
  if (e == 2) rec.check("e2-identity", via_xu == lambda, base);
  if (is_paper_e_core(lambda, e)) rec.check("core-conjugate", via_xu == conjugate(lambda), base);

  for (int s = 1; s < e; ++s) {
    const std::string where = base + " s=" + std::to_string(s);
    rec.guard("involution", where, [&] { return mullineux_crystal(mullineux_crystal(lambda, e, s), e, s) == lambda; });
    rec.guard("method-agreement", where, [&] { return mullineux_crystal(lambda, e, s) == via_xu; });

    const int k = minimal_very_dominant_k(0, s, n, e);
    const Bipartition th = theta_l2(lambda, e, s);
    rec.guard("lift-rank", where, [&] {
      const auto up = lift(th, e, s, k);
      return up.first.rank() + up.second.rank() == n;
    });
    rec.guard("lift-k-independence", where, [&] { return lift(th, e, s, k) == lift(th, e, s, k + 1); });
    rec.guard("lift-empty-second-implies-core", where, [&] {
      return !lift(th, e, s, k).second.empty() || is_paper_e_core(lambda, e);
    });
    if (!is_paper_e_core(lambda, e))
      rec.guard("lift-first-nonempty", where, [&] { return !lift(th, e, s, k).first.empty(); });
    rec.guard("blockwise-lift-agrees", where, [&] { return blockwise_lift(lambda, e, s) == lift(th, e, s, k); });
    rec.guard("blockwise-lower-agrees", where, [&] {
      const auto up = lift(th, e, s, k);
      const Bipartition nu{xu(up.first, e), xu(up.second, e)};
      const int kp = minimal_very_dominant_k(0, -s, n, e);
      const auto down = psi({Multipartition{nu.first, nu.second}, Multicharge{0, -s + kp * e}, e},
                            Multicharge{0, e - s}).mp;
      return blockwise_lower(nu, e, s) == Bipartition{down[0], down[1]};
    });
  }

  if (n > 0) {
    rec.guard("strip-lift-identity", base, [&] {
      const auto [rest, r] = xu_strip(lambda, e);
      const int k = minimal_very_dominant_k(0, e - 1, n, e);
      return lift(theta_l2(lambda, e, e - 1), e, e - 1, k) == Bipartition{Partition{r}, rest};
    });
    rec.guard("column-lift-identity", base, [&] {
      const int k = minimal_very_dominant_k(0, 1, n, e);
      return lift(theta_l2(lambda, e, 1), e, 1, k) ==
             Bipartition{xu(Partition{first_column_length(lambda)}, e), remove_first_column(lambda)};
    });
  }
  rec.guard("zero-charge-degeneracy", base, [&] {
    const int k = minimal_very_dominant_k(0, 0, n, e);
    return lift(theta_l2(lambda, e, 0), e, 0, k) == Bipartition{Partition{}, lambda};
  });

  const Multisegment row_segments = chi(lambda, 0, e);
  for (std::size_t level = 1; level <= 3; ++level) {
    for (const auto& s : fundamental_charges_from_zero(e, level)) {
      const std::string where = base + " s=" + text::format(s);
      rec.guard("theta-inverse", where, [&] { return theta_inverse(theta(lambda, e, s)) == lambda; });
      rec.guard("theta-flotw", where, [&] { return flotw_check({theta(lambda, e, s), s, e}); });
      rec.guard("theta-chi", where, [&] { return chi({theta(lambda, e, s), s, e}) == row_segments; });
      if (level == 2)
        rec.guard("theta-block-rule", where, [&] {
          const auto bp = theta_l2(lambda, e, s[1]);
          return theta(lambda, e, s) == Multipartition{bp.first, bp.second};
        });
    }
  }
}

}  // namespace detail

inline DifftestReport run_difftest(int e_lo, int e_hi, int max_n, unsigned jobs) {
  DifftestReport report{e_lo, e_hi, max_n, 0, {}};
  std::vector<detail::Item> items;
  for (int e = e_lo; e <= e_hi; ++e)
    for (int n = 0; n <= max_n; ++n) {
      auto parts = enumerate_e_regular(n, e);
      std::reverse(parts.begin(), parts.end());  // lexicographically increasing
      for (auto& p : parts) items.push_back({e, std::move(p)});
    }
  report.inputs = static_cast<long>(items.size());

  std::vector<Tallies> local(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) detail::run_item(items[i], local[i]);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& tallies : local)
    for (const auto& [name, t] : tallies) {
      auto& agg = report.properties[name];
      agg.checked += t.checked;
      agg.failed += t.failed;
      if (!agg.counterexample && t.counterexample) agg.counterexample = t.counterexample;
    }
  return report;
}

}  // namespace mullineux::cli

#pragma once

// Multicharges and the action of the extended affine symmetric group on them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mullineux/core.hpp"
#include "mullineux/error.hpp"

namespace mullineux {

class Multicharge {
 public:
  Multicharge() : entries_(1, 0) {}

  explicit Multicharge(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) fail(errc::invalid_parameter, "a multicharge needs level >= 1");
  }

  Multicharge(std::initializer_list<int> entries) : Multicharge(std::vector<int>(entries)) {}

  std::size_t level() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend auto operator<=>(const Multicharge&, const Multicharge&) = default;
  friend bool operator==(const Multicharge&, const Multicharge&) = default;

 private:
  std::vector<int> entries_;
};

enum class GeneratorKind { sigma, tau, tau_inv };

/// sigma_c (1 <= c <= l-1), tau or tau^-1.
struct Generator {
  GeneratorKind kind = GeneratorKind::tau;
  int index = 0;

  static Generator sigma(int c) { return {GeneratorKind::sigma, c}; }
  static Generator tau() { return {GeneratorKind::tau, 0}; }
  static Generator tau_inv() { return {GeneratorKind::tau_inv, 0}; }

  Generator inverse() const {
    switch (kind) {
      case GeneratorKind::sigma: return *this;
      case GeneratorKind::tau: return tau_inv();
      case GeneratorKind::tau_inv: return tau();
    }
    return *this;
  }

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Tokens are applied front to back: word[0] acts first.
using GeneratorWord = std::vector<Generator>;

inline Multicharge act_sigma(const Multicharge& s, int c) {
  if (c < 1 || static_cast<std::size_t>(c) >= s.level())
    fail(errc::invalid_parameter, "sigma index " + std::to_string(c) + " out of range");
  auto v = s.entries();
  std::swap(v[static_cast<std::size_t>(c - 1)], v[static_cast<std::size_t>(c)]);
  return Multicharge(std::move(v));
}

inline Multicharge act_tau(const Multicharge& s, int e) {
  require_e(e);
  auto v = s.entries();
  std::rotate(v.begin(), v.begin() + 1, v.end());
  v.back() += e;
  return Multicharge(std::move(v));
}

inline Multicharge act_tau_inv(const Multicharge& s, int e) {
  require_e(e);
  auto v = s.entries();
  std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
  v.front() -= e;
  return Multicharge(std::move(v));
}

/// z_i: adds e to entry i (1-based).
inline Multicharge act_shift(const Multicharge& s, int i, int e) {
  require_e(e);
  if (i < 1 || static_cast<std::size_t>(i) > s.level())
    fail(errc::invalid_parameter, "shift index " + std::to_string(i) + " out of range");
  auto v = s.entries();
  v[static_cast<std::size_t>(i - 1)] += e;
  return Multicharge(std::move(v));
}

inline Multicharge apply(const Generator& g, const Multicharge& s, int e) {
  switch (g.kind) {
    case GeneratorKind::sigma: return act_sigma(s, g.index);
    case GeneratorKind::tau: return act_tau(s, e);
    case GeneratorKind::tau_inv: return act_tau_inv(s, e);
  }
  return s;
}

inline Multicharge apply(const GeneratorWord& word, Multicharge s, int e) {
  for (const auto& g : word) s = apply(g, s, e);
  return s;
}

inline GeneratorWord inverse(const GeneratorWord& word) {
  GeneratorWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->inverse());
  return out;
}

/// s_1 <= ... <= s_l < s_1 + e.
inline bool is_fundamental(const Multicharge& s, int e) {
  require_e(e);
  const auto& v = s.entries();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) return false;
  return v.back() < v.front() + e;
}

/// Consecutive gaps exceed n - 1.
inline bool is_very_dominant(const Multicharge& s, int n) {
  const auto& v = s.entries();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] - v[i] <= n - 1) return false;
  return true;
}

inline std::vector<int> residue_profile(const Multicharge& s, int e) {
  require_e(e);
  std::vector<int> counts(static_cast<std::size_t>(e), 0);
  for (int x : s.entries()) ++counts[static_cast<std::size_t>(mod(x, e))];
  return counts;
}

/// Residue counts of s are bounded by those of t.
inline bool contains(const Multicharge& s, const Multicharge& t, int e) {
  const auto a = residue_profile(s, e);
  const auto b = residue_profile(t, e);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

inline Multicharge transpose_charge(const Multicharge& s) {
  std::vector<int> v;
  for (auto it = s.entries().rbegin(); it != s.entries().rend(); ++it) v.push_back(-*it);
  return Multicharge(std::move(v));
}

inline bool same_orbit(const Multicharge& s, const Multicharge& t, int e) {
  return s.level() == t.level() && residue_profile(s, e) == residue_profile(t, e);
}

namespace detail {

inline int least_congruent_at_least(int lower, int residue, int e) {
  return lower + mod(residue - lower, e);
}

}  // namespace detail

/// Very dominant charge for rank n with t_i = -s_i mod e, t_1 in [0, e) and
/// each gap n + delta with delta in [0, e).
inline Multicharge sharp_very_dominant(const Multicharge& s, int n, int e) {
  require_e(e);
  if (!is_very_dominant(s, n))
    fail(errc::invalid_parameter, "sharp_very_dominant needs a very dominant charge");
  std::vector<int> t(s.level());
  t[0] = mod(-s[0], e);
  for (std::size_t i = 1; i < t.size(); ++i)
    t[i] = detail::least_congruent_at_least(t[i - 1] + n, -s[i], e);
  return Multicharge(std::move(t));
}

/// Orbit representative in the fundamental domain whose first entry is min(s).
inline Multicharge fundamental_representative(const Multicharge& s, int e) {
  require_e(e);
  const int low = *std::min_element(s.entries().begin(), s.entries().end());
  std::vector<int> v;
  for (int x : s.entries()) v.push_back(low + mod(x - low, e));
  std::stable_sort(v.begin(), v.end());
  return Multicharge(std::move(v));
}

/// Entries reduced into [0, e) and sorted; fundamental.
inline Multicharge residue_representative(const Multicharge& s, int e) {
  require_e(e);
  std::vector<int> v;
  for (int x : s.entries()) v.push_back(mod(x, e));
  std::sort(v.begin(), v.end());
  return Multicharge(std::move(v));
}

/// Very dominant charge for rank n in the orbit of s, built upward from the
/// fundamental representative.
inline Multicharge very_dominant_representative(const Multicharge& s, int n, int e) {
  auto f = fundamental_representative(s, e).entries();
  for (std::size_t i = 1; i < f.size(); ++i)
    f[i] = detail::least_congruent_at_least(f[i - 1] + std::max(n, 0), f[i], e);
  return Multicharge(std::move(f));
}

namespace detail {

// Records generators while tracking the charge they produce.
class WordBuilder {
 public:
  WordBuilder(Multicharge start, int e) : charge_(std::move(start)), e_(e) {}

  void sigma(int c) { push(Generator::sigma(c)); }

  // z_i: bring entry i to the front, rotate it to the back with +e, move it home.
  void add_e(int i) {
    const int l = static_cast<int>(charge_.level());
    for (int c = i - 1; c >= 1; --c) sigma(c);
    push(Generator::tau());
    for (int c = l - 1; c >= i; --c) sigma(c);
  }

  void sub_e(int i) {
    const int l = static_cast<int>(charge_.level());
    for (int c = i; c <= l - 1; ++c) sigma(c);
    push(Generator::tau_inv());
    for (int c = 1; c <= i - 1; ++c) sigma(c);
  }

  const Multicharge& charge() const noexcept { return charge_; }
  GeneratorWord take() { return std::move(word_); }

 private:
  void push(Generator g) {
    charge_ = apply(g, charge_, e_);
    word_.push_back(g);
  }

  Multicharge charge_;
  int e_;
  GeneratorWord word_;
};

// Word taking s to its residues in [0, e), sorted ascending.
inline GeneratorWord word_to_residues(const Multicharge& s, int e) {
  WordBuilder b(s, e);
  const int l = static_cast<int>(s.level());
  for (int i = 1; i <= l; ++i) {
    while (b.charge()[static_cast<std::size_t>(i - 1)] >= e) b.sub_e(i);
    while (b.charge()[static_cast<std::size_t>(i - 1)] < 0) b.add_e(i);
  }
  for (int pass = 0; pass < l; ++pass)
    for (int c = 1; c < l; ++c)
      if (b.charge()[static_cast<std::size_t>(c - 1)] > b.charge()[static_cast<std::size_t>(c)]) b.sigma(c);
  return b.take();
}

}  // namespace detail

/// A word w with w.s = t, routed through the sorted residue representative.
inline GeneratorWord path_word(const Multicharge& s, const Multicharge& t, int e) {
  require_e(e);
  if (!same_orbit(s, t, e)) fail(errc::no_path, "charges lie in different orbits");
  GeneratorWord w = detail::word_to_residues(s, e);
  const GeneratorWord back = inverse(detail::word_to_residues(t, e));
  w.insert(w.end(), back.begin(), back.end());
  return w;
}

}  // namespace mullineux

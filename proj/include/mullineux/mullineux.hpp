#pragma once

// The Mullineux map m_e by four routes: the crystal recursion through
// bipartitions, Xu's rim stripping, a good-node branching oracle, and the
// Ariki-Koike generalisation with the induced involution on multisegments.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mullineux/charges.hpp"
#include "mullineux/core.hpp"
#include "mullineux/crystal.hpp"
#include "mullineux/error.hpp"
#include "mullineux/multisegments.hpp"
#include "mullineux/symbols.hpp"
#include "mullineux/text.hpp"
#include "mullineux/theta.hpp"
#include "mullineux/trace.hpp"

namespace mullineux {

// ---------------------------------------------------------------- Xu ------

/// Rim nodes of one component in traversal order.
struct RimNodeSet {
  std::vector<Node> nodes;

  std::size_t size() const noexcept { return nodes.size(); }
  bool contains(int row, int col) const {
    return std::any_of(nodes.begin(), nodes.end(), [&](const Node& n) { return n.row == row && n.col == col; });
  }
  friend bool operator==(const RimNodeSet&, const RimNodeSet&) = default;
};

inline RimNodeSet e_rim(const Partition& lambda, int e) {
  require_e(e);
  if (lambda.empty()) fail(errc::invalid_input, "the e-rim of the empty partition is undefined");
  RimNodeSet rim;
  const auto rows = lambda.length();
  for (std::size_t i = 1; i <= rows; ++i) {
    const int stop = std::max(1, lambda.part(i + 1));
    for (int j = lambda.part(i); j >= stop; --j) {
      rim.nodes.push_back({static_cast<int>(i), j, 1});
      if (rim.nodes.size() % static_cast<std::size_t>(e) == 0) break;
    }
  }
  return rim;
}

inline RimNodeSet truncated_e_rim(const Partition& lambda, int e) {
  const RimNodeSet rim = e_rim(lambda, e);
  RimNodeSet out;
  for (const auto& n : rim.nodes)
    if (rim.contains(n.row, n.col - 1)) out.nodes.push_back(n);
  if (rim.size() % static_cast<std::size_t>(e) != 0) {
    const int last = static_cast<int>(lambda.length());
    for (const auto& n : rim.nodes)
      if (n.row == last && !rim.contains(n.row, n.col - 1)) out.nodes.push_back(n);
  }
  return out;
}

/// Removes the truncated e-rim; returns the remaining partition and the
/// number of nodes removed.
inline std::pair<Partition, int> xu_strip(const Partition& lambda, int e) {
  const RimNodeSet cut = truncated_e_rim(lambda, e);
  std::vector<int> parts = lambda.parts();
  for (const auto& n : cut.nodes) --parts[static_cast<std::size_t>(n.row - 1)];
  std::vector<int> kept;
  for (int p : parts)
    if (p > 0) kept.push_back(p);
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) fail(errc::internal_consistency, "truncated rim removal left a non-partition");
  return {Partition(std::move(kept)), static_cast<int>(cut.size())};
}

inline Partition xu(const Partition& lambda, int e) {
  require_e(e);
  if (!is_e_regular(lambda, e)) fail(errc::invalid_input, "xu needs an e-regular partition");
  std::vector<int> columns;
  Partition cur = lambda;
  while (!cur.empty()) {
    auto [rest, r] = xu_strip(cur, e);
    columns.push_back(r);
    cur = std::move(rest);
  }
  Partition out;
  for (auto it = columns.rbegin(); it != columns.rend(); ++it) out = add_column(out, *it);
  return out;
}

// ------------------------------------------------------------ crystal -----

namespace detail {

struct CrystalStages {
  Bipartition theta;
  Multicharge theta_charge;
  Bipartition lifted;
  Multicharge lifted_charge;
  Bipartition images;
  Multicharge images_charge;
  Bipartition lowered;
  Multicharge lowered_charge;
};

inline Bipartition as_bipartition(const Multipartition& mp) { return {mp[0], mp[1]}; }
inline Multipartition as_multipartition(const Bipartition& bp) { return Multipartition{bp.first, bp.second}; }

inline Partition mullineux_crystal_impl(const Partition& lambda, int e, int s, CrystalStages* stages);

inline CrystalStages crystal_stages(const Partition& lambda, int e, int s) {
  const int n = lambda.rank();
  CrystalStages st;
  st.theta = theta_l2(lambda, e, s);
  st.theta_charge = Multicharge{0, s};
  const int k = minimal_very_dominant_k(0, s, n, e);
  st.lifted_charge = Multicharge{0, s + k * e};
  st.lifted = as_bipartition(psi({as_multipartition(st.theta), st.theta_charge, e}, st.lifted_charge).mp);
  if (st.lifted.first.empty())
    fail(errc::internal_consistency, "very dominant lift has an empty first component");
  if (st.lifted.first.rank() >= n || st.lifted.second.rank() >= n)
    fail(errc::internal_consistency, "very dominant lift did not reduce the rank");
  st.images = {mullineux_crystal_impl(st.lifted.first, e, s, nullptr),
               mullineux_crystal_impl(st.lifted.second, e, s, nullptr)};
  const int kp = minimal_very_dominant_k(0, -s, n, e);
  st.images_charge = Multicharge{0, -s + kp * e};
  st.lowered_charge = Multicharge{0, e - s};
  st.lowered = as_bipartition(psi({as_multipartition(st.images), st.images_charge, e}, st.lowered_charge).mp);
  return st;
}

inline Partition mullineux_crystal_impl(const Partition& lambda, int e, int s, CrystalStages* stages) {
  if (lambda.empty()) return {};
  if (is_paper_e_core(lambda, e)) return conjugate(lambda);
  CrystalStages st = crystal_stages(lambda, e, s);
  Partition out = theta_inverse(st.lowered);
  if (stages) *stages = std::move(st);
  return out;
}

}  // namespace detail

/// m_e through the level-two crystal recursion with parameter 0 < s < e.
inline Partition mullineux_crystal(const Partition& lambda, int e, int s) {
  require_e(e);
  if (s <= 0 || s >= e) fail(errc::invalid_parameter, "the crystal recursion needs 0 < s < e");
  if (!is_e_regular(lambda, e)) fail(errc::invalid_input, "mullineux_crystal needs an e-regular partition");
  return detail::mullineux_crystal_impl(lambda, e, s, nullptr);
}

inline Partition mullineux_crystal(const Partition& lambda, int e) { return mullineux_crystal(lambda, e, e - 1); }

/// Same result with the top-level stages recorded.
inline Partition mullineux_crystal_traced(const Partition& lambda, int e, int s, Trace& trace) {
  require_e(e);
  if (s <= 0 || s >= e) fail(errc::invalid_parameter, "the crystal recursion needs 0 < s < e");
  if (!is_e_regular(lambda, e)) fail(errc::invalid_input, "mullineux_crystal needs an e-regular partition");
  trace.push_back({"input", Multicharge{0}, text::format(lambda)});
  if (lambda.empty()) return {};
  if (is_paper_e_core(lambda, e)) {
    Partition out = conjugate(lambda);
    trace.push_back({"conjugate", Multicharge{0}, text::format(out)});
    return out;
  }
  detail::CrystalStages st;
  Partition out = detail::mullineux_crystal_impl(lambda, e, s, &st);
  trace.push_back({"theta", st.theta_charge, text::format(st.theta)});
  trace.push_back({"lift", st.lifted_charge, text::format(st.lifted)});
  trace.push_back({"mullineux", st.images_charge, text::format(st.images)});
  trace.push_back({"lower", st.lowered_charge, text::format(st.lowered)});
  trace.push_back({"concatenate", Multicharge{0}, text::format(out)});
  return out;
}

// --------------------------------------------------------- good nodes -----

/// C1 cancels adjacent (addable above removable) pairs; C2 the mirror.
enum class SignatureConvention { c1, c2 };

namespace detail {

struct SignedNode {
  int row;
  bool addable;
};

// Nodes of residue i, top row first.
inline std::vector<SignedNode> i_nodes(const std::vector<int>& parts, int i, int e) {
  std::vector<SignedNode> out;
  const int rows = static_cast<int>(parts.size());
  auto part = [&](int r) { return (r >= 1 && r <= rows) ? parts[static_cast<std::size_t>(r - 1)] : 0; };
  for (int r = 1; r <= rows + 1; ++r) {
    const int p = part(r);
    if (p > 0 && p > part(r + 1) && mod(p - r, e) == i) out.push_back({r, false});
    if ((r == 1 || part(r - 1) > p) && mod(p + 1 - r, e) == i) out.push_back({r, true});
  }
  return out;
}

inline std::vector<SignedNode> reduce_signature(const std::vector<SignedNode>& seq, SignatureConvention conv) {
  std::vector<SignedNode> stack;
  for (const auto& n : seq) {
    const bool cancels = !stack.empty() && (conv == SignatureConvention::c1 ? (stack.back().addable && !n.addable)
                                                                            : (!stack.back().addable && n.addable));
    if (cancels)
      stack.pop_back();
    else
      stack.push_back(n);
  }
  return stack;
}

inline std::optional<int> good_removable_row(const std::vector<int>& parts, int i, int e, SignatureConvention conv) {
  const auto red = reduce_signature(i_nodes(parts, i, e), conv);
  std::optional<int> row;
  for (const auto& n : red) {
    if (n.addable) continue;
    if (conv == SignatureConvention::c1) row = n.row;  // lowest
    else if (!row) row = n.row;                         // highest
  }
  return row;
}

inline std::optional<int> good_addable_row(const std::vector<int>& parts, int i, int e, SignatureConvention conv) {
  const auto red = reduce_signature(i_nodes(parts, i, e), conv);
  std::optional<int> row;
  for (const auto& n : red) {
    if (!n.addable) continue;
    if (conv == SignatureConvention::c1) {
      if (!row) row = n.row;  // highest
    } else {
      row = n.row;  // lowest
    }
  }
  return row;
}

}  // namespace detail

/// m_e by descending along good removable nodes and climbing back with the
/// negated residues.
inline Partition kleshchev_oracle(const Partition& lambda, int e,
                                  SignatureConvention conv = SignatureConvention::c1) {
  require_e(e);
  if (!is_e_regular(lambda, e)) fail(errc::invalid_input, "kleshchev_oracle needs an e-regular partition");
  std::vector<int> parts = lambda.parts();
  std::vector<int> residues;
  while (!parts.empty()) {
    bool moved = false;
    for (int i = 0; i < e && !moved; ++i) {
      if (auto row = detail::good_removable_row(parts, i, e, conv)) {
        --parts[static_cast<std::size_t>(*row - 1)];
        if (parts.back() == 0) parts.pop_back();
        residues.push_back(i);
        moved = true;
      }
    }
    if (!moved) fail(errc::internal_consistency, "no good removable node");
  }
  for (auto it = residues.rbegin(); it != residues.rend(); ++it) {
    const int i = mod(-*it, e);
    auto row = detail::good_addable_row(parts, i, e, conv);
    if (!row) fail(errc::internal_consistency, "no good addable node");
    if (static_cast<std::size_t>(*row) > parts.size()) parts.push_back(0);
    ++parts[static_cast<std::size_t>(*row - 1)];
  }
  return Partition(std::move(parts));
}

// -------------------------------------------------------- Ariki-Koike -----

/// m^{s -> target}: to a very dominant charge, m_e on each component, then
/// to the target.
inline ChargedMultipartition ak_mullineux(const ChargedMultipartition& cm, const Multicharge& target,
                                          Trace* trace = nullptr) {
  const int e = cm.e;
  const int n = cm.rank();
  if (!membership(cm)) fail(errc::invalid_input, "not an Uglov multipartition at this charge");
  if (target.level() != cm.level() || !same_orbit(transpose_charge(cm.charge), target, e))
    fail(errc::no_path, "target is not in the orbit of the transposed charge");
  const Multicharge vd = is_very_dominant(cm.charge, n) ? cm.charge : very_dominant_representative(cm.charge, n, e);
  const auto lifted = psi(cm, vd);
  std::vector<Partition> images;
  for (const auto& p : lifted.mp.components()) images.push_back(xu(p, e));
  const ChargedMultipartition swapped{Multipartition(std::move(images)), sharp_very_dominant(vd, n, e), e};
  auto out = psi(swapped, target);
  if (trace) {
    trace->push_back({"lift", lifted.charge, text::format(lifted.mp)});
    trace->push_back({"mullineux", swapped.charge, text::format(swapped.mp)});
    trace->push_back({"lower", out.charge, text::format(out.mp)});
  }
  return out;
}

namespace detail {

inline std::vector<Multicharge> candidate_charges(int e, std::size_t level) {
  std::vector<Multicharge> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth == level) {
      out.emplace_back(cur);
      return;
    }
    const int lo = depth == 0 ? 0 : cur.back();
    const int hi = depth == 0 ? e - 1 : cur.front() + e - 1;
    for (int v = lo; v <= hi; ++v) {
      cur.push_back(v);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

/// Iwahori-Matsumoto involution on aperiodic multisegments.
inline Multisegment im_sharp(const Multisegment& psi_in, int e, Trace* trace = nullptr) {
  require_e(e);
  if (!is_aperiodic(psi_in, e)) fail(errc::invalid_input, "the multisegment is not aperiodic");
  if (psi_in.empty()) return {};
  for (std::size_t level = 1; level <= 3; ++level) {
    for (const auto& s : detail::candidate_charges(e, level)) {
      auto mp = try_chi_inverse(psi_in, s, e);
      if (!mp) continue;
      const ChargedMultipartition start{*mp, s, e};
      if (trace) trace->push_back({"chi-inverse", s, text::format(*mp)});
      const auto image = ak_mullineux(start, residue_representative(transpose_charge(s), e), trace);
      Multisegment out = chi(image);
      if (trace) trace->push_back({"chi", image.charge, text::format(out)});
      return out;
    }
  }
  fail(errc::unsupported_input, "no admissible charge of level at most 3 found");
}

}  // namespace mullineux

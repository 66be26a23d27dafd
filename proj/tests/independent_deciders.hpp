#pragma once

// Per-definition decision procedures for the Lipschitz-type kinds, written
// directly from the quantifier shape of each definition with adversarial
// threshold enumeration. Deliberately independent of the library's shared
// zero-coincidence reduction: these re-derive every verdict from scratch and
// exist only to cross-check the production deciders.

#include <set>
#include <vector>

#include "realstruct/core.hpp"

namespace indep {

namespace rs = realstruct;

// Positive epsilon candidates that can change any strict comparison against
// the map's value set: the values themselves, midpoints between consecutive
// ones, half the smallest positive value, and one beyond the maximum.
inline std::vector<rs::Rational> epsilon_candidates(const rs::DistMap& d) {
  std::set<rs::Rational> values;
  for (rs::Index i = 0; i < d.size(); ++i)
    for (rs::Index j = 0; j < d.size(); ++j) values.insert(d.at(i, j));
  std::vector<rs::Rational> sorted(values.begin(), values.end());
  std::vector<rs::Rational> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (rs::Rational(0) < sorted[i]) out.push_back(sorted[i]);
    if (i + 1 < sorted.size()) out.push_back((sorted[i] + sorted[i + 1]) / 2);
  }
  if (!sorted.empty() && rs::Rational(0) < sorted.back())
    out.push_back(sorted.back() / 2);
  out.push_back(sorted.empty() ? rs::Rational(1) : sorted.back() + 1);
  std::vector<rs::Rational> positive;
  for (const auto& e : out)
    if (rs::Rational(0) < e) positive.push_back(e);
  return positive;
}

// Delta candidates: each positive value of the bound map and half its
// smallest positive value (one representative below every positive value).
inline std::vector<rs::Rational> delta_candidates(const rs::DistMap& big) {
  std::set<rs::Rational> values;
  for (rs::Index i = 0; i < big.size(); ++i)
    for (rs::Index j = 0; j < big.size(); ++j)
      if (!big.at(i, j).is_zero()) values.insert(big.at(i, j));
  std::vector<rs::Rational> out(values.begin(), values.end());
  if (!out.empty()) out.push_back(out.front() / 2);
  out.push_back(rs::Rational(1));
  return out;
}

inline std::vector<rs::Rational> alpha_candidates(const rs::DistMap& dprime,
                                                  const rs::DistMap& big) {
  std::set<rs::Rational> ratios;
  for (rs::Index i = 0; i < big.size(); ++i)
    for (rs::Index j = 0; j < big.size(); ++j)
      if (!big.at(i, j).is_zero() && !dprime.at(i, j).is_zero())
        ratios.insert(dprime.at(i, j) / big.at(i, j));
  std::vector<rs::Rational> out(ratios.begin(), ratios.end());
  out.push_back(rs::Rational(1));
  if (!ratios.empty()) out.push_back(*ratios.rbegin() * 2);
  return out;
}

// "there are a finite subfamily and alpha > 0 with d' <= alpha * max":
// the full family maximizes the right side, so it suffices as the subfamily.
inline bool lipschitz(const rs::MapFamily& absorbed, const rs::MapFamily& absorbing) {
  const rs::DistMap big = rs::family_max(absorbing);
  for (const auto& dprime : absorbed.members()) {
    bool some_alpha = false;
    for (const auto& alpha : alpha_candidates(dprime, big)) {
      bool ok = true;
      for (rs::Index i = 0; i < big.size() && ok; ++i)
        for (rs::Index j = 0; j < big.size(); ++j)
          if (alpha * big.at(i, j) < dprime.at(i, j)) {
            ok = false;
            break;
          }
      if (ok) {
        some_alpha = true;
        break;
      }
    }
    if (!some_alpha) return false;
  }
  return true;
}

// "for every eps > 0 there is delta with (max <= delta => d' <= eps)".
inline bool uniform(const rs::MapFamily& absorbed, const rs::MapFamily& absorbing) {
  const rs::DistMap big = rs::family_max(absorbing);
  const auto deltas = delta_candidates(big);
  for (const auto& dprime : absorbed.members()) {
    for (const auto& eps : epsilon_candidates(dprime)) {
      bool some_delta = false;
      for (const auto& delta : deltas) {
        bool ok = true;
        for (rs::Index i = 0; i < big.size() && ok; ++i)
          for (rs::Index j = 0; j < big.size(); ++j)
            if (!(delta < big.at(i, j)) && eps < dprime.at(i, j)) {
              ok = false;
              break;
            }
        if (ok) {
          some_delta = true;
          break;
        }
      }
      if (!some_delta) return false;
    }
  }
  return true;
}

// "for every eps > 0 there is alpha_eps with d' <= alpha_eps * max".
inline bool quasi_lipschitz(const rs::MapFamily& absorbed, const rs::MapFamily& absorbing) {
  const rs::DistMap big = rs::family_max(absorbing);
  for (const auto& dprime : absorbed.members()) {
    for (const auto& eps : epsilon_candidates(dprime)) {
      (void)eps;  // eps indexes alpha but does not occur in the inequality
      bool some_alpha = false;
      for (const auto& alpha : alpha_candidates(dprime, big)) {
        bool ok = true;
        for (rs::Index i = 0; i < big.size() && ok; ++i)
          for (rs::Index j = 0; j < big.size(); ++j)
            if (alpha * big.at(i, j) < dprime.at(i, j)) {
              ok = false;
              break;
            }
        if (ok) {
          some_alpha = true;
          break;
        }
      }
      if (!some_alpha) return false;
    }
  }
  return true;
}

// "for every eps > 0 there are alpha, beta with
//  (max <= beta => d' <= alpha * max + eps)".
inline bool uniform_quasi_lipschitz(const rs::MapFamily& absorbed,
                                    const rs::MapFamily& absorbing) {
  const rs::DistMap big = rs::family_max(absorbing);
  const auto betas = delta_candidates(big);
  for (const auto& dprime : absorbed.members()) {
    for (const auto& eps : epsilon_candidates(dprime)) {
      bool found = false;
      for (const auto& beta : betas) {
        for (const auto& alpha : alpha_candidates(dprime, big)) {
          bool ok = true;
          for (rs::Index i = 0; i < big.size() && ok; ++i)
            for (rs::Index j = 0; j < big.size(); ++j)
              if (!(beta < big.at(i, j)) && alpha * big.at(i, j) + eps < dprime.at(i, j)) {
                ok = false;
                break;
              }
          if (ok) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace indep

#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wsgd/error.hpp"

namespace wsgd {

using Eigen::Index;

enum class ShiftKind {
  Grunwald,  ///< raw, unshifted g_k
  P1Q0,
  P1QM1,
  PQR,  ///< third order, shifts (1,0,-1)
  Custom
};

/// Which combination of shifted Grunwald formulas to use.
struct ShiftScheme {
  ShiftKind kind = ShiftKind::P1Q0;
  int p = 1;
  int q = 0;

  static ShiftScheme grunwald() { return {ShiftKind::Grunwald, 0, 0}; }
  static ShiftScheme p1q0() { return {ShiftKind::P1Q0, 1, 0}; }
  static ShiftScheme p1qm1() { return {ShiftKind::P1QM1, 1, -1}; }
  static ShiftScheme pqr() { return {ShiftKind::PQR, 1, 0}; }
  static ShiftScheme custom(int p, int q) {
    if (p == q) throw ParameterError("custom shift pair needs p != q");
    return {ShiftKind::Custom, p, q};
  }

  /// Offset of values[0]: values[m] multiplies u(x - (m - lead) h).
  int lead() const {
    switch (kind) {
      case ShiftKind::Grunwald: return 0;
      case ShiftKind::Custom: return p > q ? p : q;
      default: return 1;
    }
  }

  std::string name() const {
    switch (kind) {
      case ShiftKind::Grunwald: return "gl";
      case ShiftKind::P1Q0: return "p1q0";
      case ShiftKind::P1QM1: return "p1qm1";
      case ShiftKind::PQR: return "pqr";
      case ShiftKind::Custom: return "custom(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
  }

  friend bool operator==(const ShiftScheme& a, const ShiftScheme& b) {
    if (a.kind != b.kind) return false;
    return a.kind != ShiftKind::Custom || (a.p == b.p && a.q == b.q);
  }
};

/// Finite prefix of a weight family. Indices past the end read as zero.
template <typename Scalar>
struct WeightSequence {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Scalar alpha{};
  ShiftScheme scheme{};
  Vector values;

  Index size() const { return values.size(); }
  int lead() const { return scheme.lead(); }
  Scalar operator[](Index k) const {
    return (k < 0 || k >= values.size()) ? Scalar(0) : values[k];
  }
};

namespace detail {

template <typename Scalar>
void check_alpha(Scalar alpha) {
  using std::isfinite;
  if (!isfinite(alpha) || !(alpha > Scalar(0)) || alpha > Scalar(2))
    throw ParameterError("alpha must lie in (0, 2], got " + std::to_string(double(alpha)));
}

inline void check_count(Index count, Index least) {
  if (count < least)
    throw ParameterError("count must be at least " + std::to_string(least));
}

}  // namespace detail

/// g_0..g_{count-1} of (1 - z)^alpha by the standard recursion.
template <typename Scalar = double>
WeightSequence<Scalar> grunwald_coefficients(Scalar alpha, Index count) {
  detail::check_alpha(alpha);
  detail::check_count(count, 1);
  WeightSequence<Scalar> w{alpha, ShiftScheme::grunwald(), {}};
  w.values.resize(count);
  w.values[0] = Scalar(1);
  for (Index k = 1; k < count; ++k)
    w.values[k] = (Scalar(1) - (alpha + Scalar(1)) / Scalar(k)) * w.values[k - 1];
  return w;
}

/// Second-order weights for a shift pair. P1Q0, P1QM1 and Custom(p,q) are accepted.
template <typename Scalar = double>
WeightSequence<Scalar> wsgd2_weights(Scalar alpha, ShiftScheme scheme, Index count) {
  detail::check_alpha(alpha);
  detail::check_count(count, 3);
  if (scheme.kind != ShiftKind::P1Q0 && scheme.kind != ShiftKind::P1QM1 &&
      scheme.kind != ShiftKind::Custom)
    throw ParameterError("wsgd2_weights: scheme must be p1q0, p1qm1 or a custom pair");
  const Scalar p = scheme.p, q = scheme.q;
  if (p == q) throw ParameterError("shift pair needs p != q");
  const Scalar l1 = (alpha - Scalar(2) * q) / (Scalar(2) * (p - q));
  const Scalar l2 = (Scalar(2) * p - alpha) / (Scalar(2) * (p - q));

  const int s = scheme.lead();
  // Extra terms so every shifted copy is available up to index count-1.
  const auto g = grunwald_coefficients<Scalar>(alpha, count + 2);
  WeightSequence<Scalar> w{alpha, scheme, {}};
  w.values.resize(count);
  for (Index m = 0; m < count; ++m)
    w.values[m] = l1 * g[m - s + scheme.p] + l2 * g[m - s + scheme.q];
  return w;
}

/// (lambda1, lambda2, lambda3) for three mutually distinct shifts.
template <typename Scalar = double>
std::array<Scalar, 3> wsgd3_lambdas(Scalar alpha, int p, int q, int r) {
  detail::check_alpha(alpha);
  if (p == q || q == r || p == r) throw ParameterError("shifts p, q, r must be distinct");
  const Scalar a = alpha, a2 = alpha * alpha;
  auto lam = [&](Scalar P, Scalar Q, Scalar R) {
    return (Scalar(12) * Q * R - (Scalar(6) * Q + Scalar(6) * R + Scalar(1)) * a + Scalar(3) * a2) /
           (Scalar(12) * (Q * R - P * Q - P * R + P * P));
  };
  return {lam(p, q, r), lam(q, r, p), lam(r, p, q)};
}

/// Third-order weights mu_k = l1 g_k + l2 g_{k-1} + l3 g_{k-2}, shifts (1,0,-1).
template <typename Scalar = double>
WeightSequence<Scalar> wsgd3_weights(Scalar alpha, Index count) {
  detail::check_count(count, 4);
  const auto l = wsgd3_lambdas<Scalar>(alpha, 1, 0, -1);
  const auto g = grunwald_coefficients<Scalar>(alpha, count);
  WeightSequence<Scalar> w{alpha, ShiftScheme::pqr(), {}};
  w.values.resize(count);
  for (Index k = 0; k < count; ++k) w.values[k] = l[0] * g[k] + l[1] * g[k - 1] + l[2] * g[k - 2];
  return w;
}

/// Dispatch on the scheme tag.
template <typename Scalar = double>
WeightSequence<Scalar> weights(Scalar alpha, ShiftScheme scheme, Index count) {
  switch (scheme.kind) {
    case ShiftKind::Grunwald: return grunwald_coefficients<Scalar>(alpha, count);
    case ShiftKind::PQR: return wsgd3_weights<Scalar>(alpha, count < 4 ? 4 : count);
    default: return wsgd2_weights<Scalar>(alpha, scheme, count < 3 ? 3 : count);
  }
}

struct PropertyCheck {
  std::string name;
  bool ok;
  double witness;  ///< the value that decided the check
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  bool all() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const PropertyCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Sign, monotonicity and partial-sum properties of the weight family.
/// "x < 0" is read as x < 1e-13 so the alpha = 2 zeros pass.
template <typename Scalar = double>
PropertyReport verify_weight_properties(Scalar alpha, ShiftScheme scheme, Index count) {
  detail::check_count(count, 5);
  if (!(alpha > Scalar(1)) || alpha > Scalar(2))
    throw ParameterError("property checks need alpha in (1, 2]");
  const double tol = 1e-13;
  const auto w = weights<Scalar>(alpha, scheme, count);
  PropertyReport rep;
  auto add = [&](std::string name, bool ok, Scalar wit) {
    rep.checks.push_back({std::move(name), ok, double(wit)});
  };
  auto neg = [&](Scalar v) { return double(v) < tol; };

  // Non-increasing, nonnegative, bounded by 1 along the given index chain.
  auto chain = [&](const std::string& name, std::vector<Index> idx) {
    bool ok = double(w[idx.front()]) <= 1.0 + tol;
    Scalar wit = w[idx.front()];
    for (size_t i = 0; ok && i + 1 < idx.size(); ++i) {
      if (double(w[idx[i + 1]] - w[idx[i]]) > tol) ok = false, wit = w[idx[i + 1]];
    }
    if (ok && double(w[idx.back()]) < -tol) ok = false, wit = w[idx.back()];
    add(name, ok, wit);
  };
  auto partial_sums = [&](const std::string& name, auto include) {
    Scalar s(0), worst = -std::numeric_limits<Scalar>::infinity();
    bool ok = true;
    for (Index m = 0; m < count; ++m) {
      s += w[m];
      if (!include(m)) continue;
      if (s > worst) worst = s;
      if (!neg(s)) ok = false;
    }
    add(name, ok, worst);
  };
  auto tail = [](Index from, Index count) {
    std::vector<Index> v;
    for (Index k = from; k < count; ++k) v.push_back(k);
    return v;
  };

  switch (scheme.kind) {
    case ShiftKind::Grunwald: {
      add("g1 == -alpha", std::abs(double(w[1] + alpha)) <= tol, w[1]);
      add("g1 < 0", neg(w[1]), w[1]);
      chain("1 >= g2 >= g3 >= ... >= 0", tail(2, count));
      partial_sums("sum_{k<=m} g_k < 0, m >= 1", [](Index m) { return m >= 1; });
      break;
    }
    case ShiftKind::P1Q0: {
      add("w1 < 0", neg(w[1]), w[1]);
      auto idx = tail(3, count);
      idx.insert(idx.begin(), 0);
      chain("1 >= w0 >= w3 >= w4 >= ... >= 0", idx);
      partial_sums("sum_{k<=m} w_k < 0, m >= 2", [](Index m) { return m >= 2; });
      break;
    }
    case ShiftKind::P1QM1: {
      add("w1 < 0", neg(w[1]), w[1]);
      add("w2 > 0", double(w[2]) > 0.0, w[2]);
      add("w3 <= 0", double(w[3]) <= tol, w[3]);
      auto idx = tail(4, count);
      idx.insert(idx.begin(), {0, 2});
      chain("1 >= w0 >= w2 >= w4 >= w5 >= ... >= 0", idx);
      partial_sums("sum_{k<=m} w_k < 0, m = 1 and m >= 3",
                   [](Index m) { return m == 1 || m >= 3; });
      break;
    }
    default:
      throw ParameterError("no property list for scheme " + scheme.name());
  }
  return rep;
}

}  // namespace wsgd

// Copyright 2026 The qfm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qfm/error.hpp"

namespace qfm {

// Whether a fuzzy number reads a cardinality or a proportion in [0,1].
enum class DomainKind { absolute, proportional };

inline const char* to_string(DomainKind k) {
  return k == DomainKind::absolute ? "absolute" : "proportional";
}

// Curve used to specify quantifiers: trapezoid T_{a,b,c,d}, S-shape
// S_{α,γ}, the identity, or a piecewise-linear interpolant.
class FuzzyNumberSpec {
 public:
  struct Trapezoid {
    double a, b, c, d;
  };
  struct SShape {
    double alpha, gamma;
  };
  struct Identity {};
  struct PiecewiseLinear {
    std::vector<std::pair<double, double>> knots;
  };
  using Variant = std::variant<Trapezoid, SShape, Identity, PiecewiseLinear>;

  static FuzzyNumberSpec trapezoid(double a, double b, double c, double d,
                                   DomainKind kind = DomainKind::absolute) {
    return FuzzyNumberSpec(Trapezoid{a, b, c, d}, kind);
  }
  static FuzzyNumberSpec s_shape(double alpha, double gamma,
                                 DomainKind kind = DomainKind::proportional) {
    return FuzzyNumberSpec(SShape{alpha, gamma}, kind);
  }
  static FuzzyNumberSpec identity(DomainKind kind = DomainKind::proportional) {
    return FuzzyNumberSpec(Identity{}, kind);
  }
  static FuzzyNumberSpec piecewise_linear(std::vector<std::pair<double, double>> knots,
                                          DomainKind kind = DomainKind::proportional) {
    return FuzzyNumberSpec(PiecewiseLinear{std::move(knots)}, kind);
  }

  const Variant& variant() const { return v_; }
  DomainKind domain() const { return kind_; }

  double operator()(double x) const {
    return std::visit([x](const auto& s) { return std::clamp(eval(s, x), 0.0, 1.0); }, v_);
  }

  // Exact integral over [lo, hi].
  double area(double lo = 0.0, double hi = 1.0) const {
    if (hi <= lo) return 0.0;
    return std::visit([&](const auto& s) { return integrate(s, lo, hi); }, v_);
  }

  // Flat parameter vector: trapezoid (a,b,c,d), S-shape (α,γ), identity
  // (), piecewise-linear (x0,y0,x1,y1,...).
  std::vector<double> parameters() const {
    return std::visit(
        [](const auto& s) -> std::vector<double> {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Trapezoid>) {
            return {s.a, s.b, s.c, s.d};
          } else if constexpr (std::is_same_v<T, SShape>) {
            return {s.alpha, s.gamma};
          } else if constexpr (std::is_same_v<T, Identity>) {
            return {};
          } else {
            std::vector<double> p;
            for (auto [x, y] : s.knots) {
              p.push_back(x);
              p.push_back(y);
            }
            return p;
          }
        },
        v_);
  }

  // Same variant with replaced parameters; revalidates.
  FuzzyNumberSpec with_parameters(const std::vector<double>& p) const {
    auto expect = [&](std::size_t n) {
      if (p.size() != n) throw ArgumentError("fuzzy number expects " + std::to_string(n) + " parameters");
    };
    return std::visit(
        [&](const auto& s) -> FuzzyNumberSpec {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Trapezoid>) {
            expect(4);
            return FuzzyNumberSpec(Trapezoid{p[0], p[1], p[2], p[3]}, kind_);
          } else if constexpr (std::is_same_v<T, SShape>) {
            expect(2);
            return FuzzyNumberSpec(SShape{p[0], p[1]}, kind_);
          } else if constexpr (std::is_same_v<T, Identity>) {
            expect(0);
            return *this;
          } else {
            expect(s.knots.size() * 2);
            std::vector<std::pair<double, double>> k;
            for (std::size_t i = 0; i + 1 < p.size(); i += 2) k.emplace_back(p[i], p[i + 1]);
            return FuzzyNumberSpec(PiecewiseLinear{std::move(k)}, kind_);
          }
        },
        v_);
  }

  std::string describe() const {
    std::ostringstream os;
    os.precision(6);
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Trapezoid>) {
            os << "T(" << s.a << "," << s.b << "," << s.c << "," << s.d << ")";
          } else if constexpr (std::is_same_v<T, SShape>) {
            os << "S(" << s.alpha << "," << s.gamma << ")";
          } else if constexpr (std::is_same_v<T, Identity>) {
            os << "identity";
          } else {
            os << "PL[";
            for (std::size_t i = 0; i < s.knots.size(); ++i) {
              os << (i ? " " : "") << s.knots[i].first << ":" << s.knots[i].second;
            }
            os << "]";
          }
        },
        v_);
    os << "/" << to_string(kind_);
    return os.str();
  }

 private:
  FuzzyNumberSpec(Variant v, DomainKind kind) : v_(std::move(v)), kind_(kind) {
    std::visit([](const auto& s) { validate(s); }, v_);
  }

  static void validate(const Trapezoid& t) {
    if (!(t.a <= t.b && t.b <= t.c && t.c <= t.d)) {
      throw ArgumentError("trapezoid requires a <= b <= c <= d");
    }
  }
  static void validate(const SShape& s) {
    if (!(s.alpha < s.gamma)) throw ArgumentError("S-shape requires alpha < gamma");
  }
  static void validate(const Identity&) {}
  static void validate(const PiecewiseLinear& p) {
    if (p.knots.empty()) throw ArgumentError("piecewise-linear fuzzy number needs at least one knot");
    for (std::size_t i = 0; i < p.knots.size(); ++i) {
      const auto [x, y] = p.knots[i];
      if (!(y >= 0.0 && y <= 1.0)) throw ArgumentError("piecewise-linear knot value outside [0,1]");
      if (!std::isfinite(x)) throw ArgumentError("piecewise-linear knot position must be finite");
      if (i > 0 && !(x > p.knots[i - 1].first)) {
        throw ArgumentError("piecewise-linear knots must be strictly increasing in x");
      }
    }
  }

  static double eval(const Trapezoid& t, double x) {
    if (x <= t.a) return 0.0;
    if (x <= t.b) return (x - t.a) / (t.b - t.a);
    if (x <= t.c) return 1.0;
    if (x <= t.d) return 1.0 - (x - t.c) / (t.d - t.c);
    return 0.0;
  }
  static double eval(const SShape& s, double x) {
    const double w = s.gamma - s.alpha;
    if (x <= s.alpha) return 0.0;
    if (x <= 0.5 * (s.alpha + s.gamma)) {
      const double r = (x - s.alpha) / w;
      return 2.0 * r * r;
    }
    if (x <= s.gamma) {
      const double r = (x - s.gamma) / w;
      return 1.0 - 2.0 * r * r;
    }
    return 1.0;
  }
  static double eval(const Identity&, double x) { return x; }
  static double eval(const PiecewiseLinear& p, double x) {
    const auto& k = p.knots;
    if (x <= k.front().first) return k.front().second;
    if (x >= k.back().first) return k.back().second;
    auto it = std::upper_bound(k.begin(), k.end(), x,
                               [](double v, const auto& knot) { return v < knot.first; });
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }

  // Integral of the linear interpolant through `knots` (constant
  // extension outside) over [lo, hi].
  static double integrate_knots(const std::vector<std::pair<double, double>>& knots, double lo,
                                double hi) {
    auto value = [&](double x) { return eval(PiecewiseLinear{knots}, x); };
    std::vector<double> xs{lo, hi};
    for (auto [x, y] : knots) {
      if (x > lo && x < hi) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      s += 0.5 * (value(xs[i]) + value(xs[i + 1])) * (xs[i + 1] - xs[i]);
    }
    return s;
  }

  static double integrate(const Trapezoid& t, double lo, double hi) {
    // Rising edge, plateau, falling edge; vertical edges contribute nothing.
    auto clip = [&](double a, double b) { return std::pair{std::max(a, lo), std::min(b, hi)}; };
    double s = 0.0;
    if (auto [u, v] = clip(t.a, t.b); t.b > t.a && v > u) {
      s += ((v - t.a) * (v - t.a) - (u - t.a) * (u - t.a)) / (2.0 * (t.b - t.a));
    }
    if (auto [u, v] = clip(t.b, t.c); v > u) s += v - u;
    if (auto [u, v] = clip(t.c, t.d); t.d > t.c && v > u) {
      s += ((t.d - u) * (t.d - u) - (t.d - v) * (t.d - v)) / (2.0 * (t.d - t.c));
    }
    return s;
  }
  static double integrate(const SShape& s, double lo, double hi) {
    const double w = s.gamma - s.alpha, mid = 0.5 * (s.alpha + s.gamma);
    auto anti = [&](double x) {
      // Antiderivative of S, zero at alpha, continuous everywhere.
      if (x <= s.alpha) return 0.0;
      if (x <= mid) return 2.0 * std::pow(x - s.alpha, 3) / (3.0 * w * w);
      const double at_mid = 2.0 * std::pow(mid - s.alpha, 3) / (3.0 * w * w);
      auto upper = [&](double u) { return u - 2.0 * std::pow(u - s.gamma, 3) / (3.0 * w * w); };
      if (x <= s.gamma) return at_mid + upper(x) - upper(mid);
      return at_mid + upper(s.gamma) - upper(mid) + (x - s.gamma);
    };
    return anti(hi) - anti(lo);
  }
  static double integrate(const Identity&, double lo, double hi) {
    auto anti = [](double x) {
      if (x <= 0.0) return 0.0;
      if (x <= 1.0) return 0.5 * x * x;
      return 0.5 + (x - 1.0);
    };
    return anti(hi) - anti(lo);
  }
  static double integrate(const PiecewiseLinear& p, double lo, double hi) {
    return integrate_knots(p.knots, lo, hi);
  }

  Variant v_;
  DomainKind kind_;
};

}  // namespace qfm

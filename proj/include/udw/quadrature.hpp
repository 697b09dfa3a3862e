#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "udw/errors.hpp"

namespace udw::quad {

// Gauss-Legendre rule on [-1, 1]. Nodes are found by Newton iteration on the
// Legendre recurrence; rules are cached per order.
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;

  explicit GaussLegendre(int n) {
    if (n < 1) throw InvalidParameter("Gauss-Legendre order must be >= 1");
    x.resize(n);
    w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / pp;
        z -= dz;
        if (std::abs(dz) < 1e-15) break;
      }
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[n - 1 - i] = w[i];
    }
  }
};

inline const GaussLegendre& gauss_legendre(int n) {
  static std::map<int, GaussLegendre> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
  return it->second;
}

// One GL panel over [lo, hi].
template <class F>
auto integrate_panel(const GaussLegendre& g, double lo, double hi, F&& f) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  using R = decltype(f(mid));
  R acc{};
  for (std::size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * f(mid + half * g.x[i]);
  return acc * half;
}

// Composite rule over consecutive [edges[k], edges[k+1]] panels.
template <class F>
auto integrate_panels(const GaussLegendre& g, const std::vector<double>& edges, F&& f) {
  using R = decltype(f(edges.front()));
  R acc{};
  for (std::size_t k = 0; k + 1 < edges.size(); ++k)
    acc += integrate_panel(g, edges[k], edges[k + 1], f);
  return acc;
}

// Uniform panel edges covering [0, len].
inline std::vector<double> uniform_edges(double len, int panels) {
  std::vector<double> edges(panels + 1);
  for (int k = 0; k <= panels; ++k) edges[k] = len * k / panels;
  return edges;
}

// Geometrically graded edges 0, scale, 2*scale, 4*scale, ... clamped at len.
// Resolves an integrand feature of width ~scale at the origin.
inline std::vector<double> graded_edges(double scale, double len) {
  std::vector<double> edges{0.0};
  double e = scale;
  while (e < len) {
    edges.push_back(e);
    e *= 2.0;
  }
  edges.push_back(len);
  return edges;
}

}  // namespace udw::quad

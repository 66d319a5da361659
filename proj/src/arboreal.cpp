#include "arsite/arboreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "arsite/error.hpp"

namespace arsite {

namespace {

using CPoly = std::vector<Complex>;  // lowest degree first

CPoly to_complex(const PolyQ& f) {
  CPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c.to_long_double(), 0.0L);
  return out;
}

// Value and derivative by Horner.
std::pair<Complex, Complex> horner(const CPoly& p, Complex z) {
  Complex v = 0, dv = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    dv = dv * z + v;
    v = v * z + *it;
  }
  return {v, dv};
}

std::vector<Complex> aberth(const CPoly& p) {
  const std::size_t n = p.size() - 1;
  if (n == 0) return {};
  const Complex lead = p.back();
  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(p[i] / lead));
  const long double radius = 1.0L + bound;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = std::polar(radius * 0.5L + 0.1L, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      auto [v, dv] = horner(p, z[k]);
      if (v == Complex(0)) continue;
      const Complex ratio = v / dv;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0L + std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

Complex newton_polish(const CPoly& p, Complex z) {
  for (int i = 0; i < 8; ++i) {
    auto [v, dv] = horner(p, z);
    if (dv == Complex(0) || v == Complex(0)) break;
    const Complex step = v / dv;
    z -= step;
    if (std::abs(step) <= 1e-19L * (1.0L + std::abs(z))) break;
  }
  return z;
}

// B_{i_1}∘...∘B_{i_k}(z) - alpha and its derivative.
std::pair<Complex, Complex> composite_eval(const std::vector<CPoly>& chain, Complex alpha, std::size_t k, Complex z) {
  Complex v = z, dv = 1;
  for (std::size_t j = k; j-- > 0;) {
    auto [w, dw] = horner(chain[j], v);
    dv *= dw;
    v = w;
  }
  return {v - alpha, dv};
}

bool real_first_less(Complex a, Complex b, long double tol) {
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::string fmt(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

Natural sequence_degree(std::span<const BelyiPoly> gens) {
  if (gens.empty()) throw DomainError("empty generator sequence");
  const Natural d = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != d) throw DomainError("generators must share one degree");
  }
  return d;
}

bool genericity_check(std::span<const BelyiPoly> gens, const Rational& alpha) {
  if (alpha <= Rational(0) || alpha >= Rational(1)) throw DomainError("alpha must lie in (0, 1)");
  for (const auto& g : gens) {
    const Rational v = g.poly()(alpha);
    if (v == Rational(0) || v == Rational(1)) return false;
  }
  return true;
}

PolyQ iterate_composite(std::span<const BelyiPoly> gens, std::size_t n) {
  if (gens.empty()) throw DomainError("empty generator sequence");
  PolyQ acc = PolyQ::x();
  for (std::size_t k = 0; k < n; ++k) acc = compose(acc, gens[k % gens.size()].poly());
  return acc;
}

bool squarefree_level(std::span<const BelyiPoly> gens, const Rational& alpha, std::size_t n) {
  if (n == 0) throw DomainError("level must be at least 1");
  const PolyQ f = iterate_composite(gens, n) - PolyQ::constant(alpha);
  return gcd(f, derivative(f)).degree() == 0;
}

long double residual(std::span<const BelyiPoly> gens, const Rational& alpha, std::size_t k, Complex z) {
  std::vector<CPoly> chain;
  for (std::size_t j = 0; j < k; ++j) chain.push_back(to_complex(gens[j % gens.size()].poly()));
  return std::abs(composite_eval(chain, Complex(alpha.to_long_double(), 0), k, z).first);
}

ArborealTree build_tree(std::span<const BelyiPoly> gens, const Rational& alpha, std::size_t n, long double tol,
                        bool certify) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const Natural d = sequence_degree(gens);
  if (!genericity_check(gens, alpha)) throw DomainError("alpha is not generic for the generators");
  Natural leaves = 1;
  for (std::size_t k = 0; k < n; ++k) {
    leaves *= d;
    if (leaves > kMaxLeaves) {
      throw DomainError("d^n = " + std::to_string(d) + "^" + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxLeaves) + " leaves");
    }
  }

  ArborealTree tree;
  tree.degree = d;
  tree.alpha = alpha;
  tree.tol = tol;
  const Complex a(alpha.to_long_double(), 0);
  tree.levels.push_back({TreeNode{a, 0}});

  std::vector<CPoly> chain;
  PolyQ composite = PolyQ::x();
  for (std::size_t k = 1; k <= n; ++k) {
    const BelyiPoly& b = gens[(k - 1) % gens.size()];
    chain.push_back(to_complex(b.poly()));
    if (certify) {
      composite = compose(composite, b.poly());
      const PolyQ f = composite - PolyQ::constant(alpha);
      const bool ok = gcd(f, derivative(f)).degree() == 0;
      tree.certified.push_back(ok);
      if (!ok) throw DomainError("level " + std::to_string(k) + " has repeated roots");
    }

    const auto& parents = tree.levels.back();
    std::vector<Complex> roots;
    roots.reserve(parents.size() * d);
    for (const auto& parent : parents) {
      CPoly local = chain.back();
      local[0] -= parent.value;
      for (Complex z : aberth(local)) {
        z = newton_polish(local, z);
        // Polish against the full composite, keeping the better candidate.
        Complex w = z;
        for (int i = 0; i < 4; ++i) {
          auto [v, dv] = composite_eval(chain, a, k, w);
          if (dv == Complex(0)) break;
          w -= v / dv;
        }
        if (std::abs(composite_eval(chain, a, k, w).first) < std::abs(composite_eval(chain, a, k, z).first)) z = w;
        roots.push_back(z);
      }
    }

    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        const long double gap = std::abs(roots[i] - roots[j]);
        if (gap < 2 * tol) {
          std::ostringstream os;
          os << "tolerance collision at level " << k << ": roots " << i << " and " << j << " are " << gap
             << " apart (tol " << tol << ")";
          throw DomainError(os.str());
        }
      }
    }

    std::vector<std::vector<Complex>> groups(parents.size());
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const Complex image = horner(chain.back(), roots[r]).first;
      std::vector<std::pair<long double, std::size_t>> dist;
      dist.reserve(parents.size());
      for (std::size_t p = 0; p < parents.size(); ++p) dist.emplace_back(std::abs(image - parents[p].value), p);
      std::partial_sort(dist.begin(), dist.begin() + std::min<std::size_t>(2, dist.size()), dist.end());
      const bool close = dist[0].first <= tol;
      const bool unique = dist.size() < 2 || dist[1].first > 10 * tol;
      if (!close || !unique) {
        std::ostringstream os;
        os << "matching ambiguity at level " << k << ": root " << r << " maps at distance " << dist[0].first
           << " from its nearest parent";
        if (dist.size() > 1) os << " and " << dist[1].first << " from the next";
        throw DomainError(os.str());
      }
      groups[dist[0].second].push_back(roots[r]);
    }

    std::vector<TreeNode> level;
    level.reserve(roots.size());
    for (std::size_t p = 0; p < groups.size(); ++p) {
      auto& g = groups[p];
      if (g.size() != d) {
        throw DomainError("matching ambiguity at level " + std::to_string(k) + ": parent " + std::to_string(p) +
                          " has " + std::to_string(g.size()) + " children");
      }
      std::sort(g.begin(), g.end(), [&](Complex x, Complex y) { return real_first_less(x, y, tol); });
      for (Complex z : g) level.push_back(TreeNode{z, p});
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

std::vector<Complex> numeric_roots(const PolyQ& f) {
  if (f.is_zero()) throw DomainError("zero polynomial has no finite root set");
  const CPoly p = to_complex(f);
  std::vector<Complex> roots = aberth(p);
  for (auto& z : roots) z = newton_polish(p, z);
  return roots;
}

std::size_t cluster_count(std::span<const Complex> points, long double radius) {
  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (std::abs(points[i] - points[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) count += find(i) == i;
  return count;
}

std::string tree_dot(const ArborealTree& t) {
  std::ostringstream os;
  os << "digraph arboreal {\n";
  std::vector<std::size_t> offset;
  std::size_t next = 0;
  for (const auto& level : t.levels) {
    offset.push_back(next);
    next += level.size();
  }
  for (std::size_t k = 0; k < t.levels.size(); ++k) {
    for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
      const Complex z = t.levels[k][i].value;
      os << "  n" << offset[k] + i << " [label=\"" << fmt(z.real()) << (z.imag() < 0 ? "" : "+") << fmt(z.imag())
         << "i\"];\n";
    }
  }
  for (std::size_t k = 1; k < t.levels.size(); ++k) {
    for (std::size_t i = 0; i < t.levels[k].size(); ++i) {
      os << "  n" << offset[k - 1] + t.levels[k][i].parent << " -> n" << offset[k] + i << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string tree_json(const ArborealTree& t) {
  nlohmann::ordered_json j;
  j["degree"] = t.degree;
  j["alpha"] = t.alpha.str();
  j["tol"] = static_cast<double>(t.tol);
  auto levels = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < t.levels.size(); ++k) {
    auto level = nlohmann::ordered_json::array();
    for (const auto& node : t.levels[k]) {
      nlohmann::ordered_json n;
      n["value"] = {static_cast<double>(node.value.real()), static_cast<double>(node.value.imag())};
      if (k > 0) n["parent"] = node.parent;
      level.push_back(std::move(n));
    }
    levels.push_back(std::move(level));
  }
  j["levels"] = std::move(levels);
  return j.dump();
}

}  // namespace arsite

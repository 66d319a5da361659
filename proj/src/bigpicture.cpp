#include "arsite/bigpicture.hpp"

#include <future>
#include <map>
#include <numeric>
#include <sstream>

#include "arsite/error.hpp"
#include "arsite/supernatural.hpp"

namespace arsite {

PicClass::PicClass(Rational scale, Rational offset) : scale_(std::move(scale)), offset_(offset.frac()) {
  if (scale_.sign() <= 0) throw DomainError("class scale must be positive");
}

PicClass PicClass::from_matrix(const Mat2Q& m) {
  if (!m.c.is_zero()) throw DomainError("expected an upper-triangular matrix");
  if (m.a.is_zero() || m.d.is_zero()) throw DomainError("singular matrix has no class");
  Rational scale = m.a / m.d;
  if (scale.sign() < 0) throw DomainError("matrix has negative determinant");
  return PicClass(scale, m.b / m.d);
}

std::string PicClass::str() const { return scale_.str() + ":" + offset_.str(); }

PicClass PicClass::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected a class 'M:g/h', got '" + std::string(text) + "'");
  }
  Rational scale = Rational::parse(text.substr(0, colon));
  Rational offset = Rational::parse(text.substr(colon + 1));
  if (scale.sign() <= 0) throw ParseError("class scale must be positive: '" + std::string(text) + "'");
  return PicClass(scale, offset);
}

Natural hyperdistance(const PicClass& x, const PicClass& y) {
  PrimitiveForm pf = primitive_form(x.matrix() * y.matrix().inverse());
  return to_natural(pf.matrix.det());
}

std::vector<PicClass> neighbours(const PicClass& x, Natural p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const Rational prime(static_cast<long long>(p));
  std::vector<PicClass> out;
  out.reserve(p + 1);
  for (Natural k = 0; k < p; ++k) {
    out.emplace_back(x.scale() / prime, (x.offset() + Rational(static_cast<long long>(k))) / prime);
  }
  out.emplace_back(x.scale() * prime, x.offset() * prime);
  return out;
}

std::set<PicClass> fiber(Natural n, unsigned jobs) {
  if (n == 0) throw DomainError("fiber index must be positive");
  const auto primes = factorize(n);
  // Level sets by distance; every class at distance m | n is reached from a
  // class at distance m/p by one p-step.
  std::map<Natural, std::set<PicClass>> by_distance;
  by_distance[1].insert(PicClass());
  std::vector<Natural> divisors;
  for (Natural d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  auto expand = [&](Natural m, const PicClass& x) {
    std::vector<std::pair<Natural, PicClass>> found;
    for (const auto& [p, e] : primes) {
      if ((n / m) % p != 0) continue;
      for (const PicClass& y : neighbours(x, p)) {
        if (distance_from_one(y) == m * p) found.emplace_back(m * p, y);
      }
    }
    return found;
  };
  for (Natural m : divisors) {
    if (m == n) break;
    auto it = by_distance.find(m);
    if (it == by_distance.end()) continue;
    std::vector<PicClass> frontier(it->second.begin(), it->second.end());
    std::vector<std::vector<std::pair<Natural, PicClass>>> results(frontier.size());
    if (jobs > 1 && frontier.size() > 1) {
      std::vector<std::future<void>> tasks;
      const std::size_t chunk = (frontier.size() + jobs - 1) / jobs;
      for (std::size_t start = 0; start < frontier.size(); start += chunk) {
        tasks.push_back(std::async(std::launch::async, [&, start] {
          for (std::size_t i = start; i < std::min(frontier.size(), start + chunk); ++i) {
            results[i] = expand(m, frontier[i]);
          }
        }));
      }
      for (auto& t : tasks) t.get();
    } else {
      for (std::size_t i = 0; i < frontier.size(); ++i) results[i] = expand(m, frontier[i]);
    }
    for (auto& batch : results) {
      for (auto& [d, y] : batch) by_distance[d].insert(std::move(y));
    }
  }
  return by_distance[n];
}

Natural psi(Natural n) {
  if (n == 0) throw DomainError("psi is defined for positive n");
  Natural out = n;
  for (const auto& [p, e] : factorize(n)) out = out / p * (p + 1);
  return out;
}

Natural proj_line_count(Natural n) {
  if (n == 0) throw DomainError("projective line needs n >= 1");
  std::vector<Natural> units;
  for (Natural u = 0; u < n; ++u) {
    if (std::gcd(u, n) == 1) units.push_back(u);
  }
  if (n == 1) units = {0};
  std::vector<char> seen(n * n, 0);
  Natural orbits = 0;
  for (Natural a = 0; a < n; ++a) {
    for (Natural b = 0; b < n; ++b) {
      if (seen[a * n + b] || std::gcd(std::gcd(a, b), n) != 1) continue;
      ++orbits;
      for (Natural u : units) seen[(u * a % n) * n + (u * b % n)] = 1;
    }
  }
  return orbits;
}

Ball ball(const PicClass& centre, std::span<const Natural> primes, Natural radius) {
  for (Natural p : primes) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  }
  Ball out;
  std::map<PicClass, std::size_t> index;
  std::set<std::tuple<std::size_t, std::size_t, Natural>> edge_keys;
  out.vertices.push_back(centre);
  index[centre] = 0;
  std::vector<std::size_t> frontier{0};
  for (Natural step = 0; step < radius; ++step) {
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      const PicClass x = out.vertices[v];
      for (Natural p : primes) {
        for (const PicClass& y : neighbours(x, p)) {
          auto [it, inserted] = index.try_emplace(y, out.vertices.size());
          if (inserted) {
            out.vertices.push_back(y);
            next.push_back(it->second);
          }
          std::size_t a = std::min(v, it->second);
          std::size_t b = std::max(v, it->second);
          if (edge_keys.emplace(a, b, p).second) out.edges.push_back({v, it->second, p});
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::string ball_dot(const PicClass& centre, std::span<const Natural> primes, Natural radius) {
  Ball b = ball(centre, primes, radius);
  std::ostringstream os;
  os << "graph bigpicture {\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << b.vertices[i].str() << "\"];\n";
  }
  for (const auto& e : b.edges) {
    os << "  v" << e.from << " -- v" << e.to << " [label=\"" << e.prime << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace arsite

#include "arsite/bost_connes.hpp"

#include <map>

#include <json.hpp>

#include "arsite/error.hpp"
#include "arsite/supernatural.hpp"

namespace arsite {

namespace {

Rational rat(Natural n) { return Rational(static_cast<long long>(n)); }

void require_positive(Natural n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

std::vector<QZElement> level(Natural n) {
  require_positive(n, "level");
  std::vector<QZElement> out;
  out.reserve(n);
  for (Natural c = 0; c < n; ++c) out.emplace_back(rat(c) / rat(n));
  return out;
}

QZElement QZDatum::sigma(Natural n, const QZElement& x) const { return QZElement(x.value() * rat(n)); }

QZElement QZDatum::section(Natural n, const QZElement& x) const {
  require_positive(n, "section index");
  return QZElement(x.value() / rat(n));
}

std::vector<QZElement> QZDatum::kernel(Natural n) const { return level(n); }

QZElement QZDatum::kernel_element(Natural n, Natural i) const {
  require_positive(n, "kernel index");
  return QZElement(rat(i) / rat(n));
}

const QZDatum& qz_datum() {
  static const QZDatum datum;
  return datum;
}

std::string ConditionReport::to_json() const {
  nlohmann::ordered_json j;
  j["condition"] = condition;
  for (const auto& [k, v] : params) j[k] = v;
  j["ok"] = ok;
  j["cells"] = cells;
  if (!detail.empty()) j["detail"] = detail;
  return j.dump();
}

ConditionReport check_endomorphisms(Natural n, Natural m, Natural level_n, const BCDatum& datum) {
  require_positive(n, "n");
  require_positive(m, "m");
  ConditionReport r;
  r.condition = 2;
  r.params = {{"n", n}, {"m", m}, {"level", level_n}};
  r.ok = true;
  const auto xs = level(level_n);
  const auto kernel_n = datum.kernel(n);
  const std::set<QZElement> kernel_set(kernel_n.begin(), kernel_n.end());
  auto fail = [&](const std::string& why) {
    if (r.ok) r.detail = why;
    r.ok = false;
  };
  for (const auto& x : xs) {
    ++r.cells;
    if (datum.sigma(n, datum.sigma(m, x)) != datum.sigma(n * m, x)) fail("sigma_n sigma_m != sigma_nm at " + x.str());
    if (datum.sigma(n, datum.sigma(m, x)) != datum.sigma(m, datum.sigma(n, x))) fail("sigmas do not commute at " + x.str());
    if (datum.section(n, datum.section(m, x)) != datum.section(m, datum.section(n, x))) {
      fail("sections do not commute at " + x.str());
    }
    if (datum.sigma(n, datum.section(n, x)) != x) fail("s_n is not a section of sigma_n at " + x.str());
    const QZElement gap = datum.section(n, datum.sigma(m, x)) - datum.sigma(m, datum.section(n, x));
    if (!kernel_set.contains(gap)) fail("s_n and sigma_m differ outside C_n at " + x.str());
    for (const auto& y : xs) {
      if (datum.sigma(n, x + y) != datum.sigma(n, x) + datum.sigma(n, y)) fail("sigma_n is not additive");
    }
  }
  return r;
}

ConditionReport check_condition3(Natural n, const BCDatum& datum) {
  require_positive(n, "n");
  ConditionReport r;
  r.condition = 3;
  r.params = {{"n", n}};
  std::set<QZElement> brute;
  for (const auto& x : level(n * n)) {
    ++r.cells;
    if (datum.sigma(n, x) == QZElement()) brute.insert(x);
  }
  const auto listed = datum.kernel(n);
  const std::set<QZElement> listed_set(listed.begin(), listed.end());
  bool cyclic = false;
  for (const auto& g : listed) {
    std::set<QZElement> generated;
    QZElement cur;
    do {
      generated.insert(cur);
      cur = cur + g;
    } while (cur != QZElement());
    if (generated == brute) {
      cyclic = true;
      break;
    }
  }
  r.ok = brute.size() == n && listed_set == brute && listed.size() == n && !listed.empty() &&
         listed.front() == QZElement() && cyclic;
  if (!r.ok) r.detail = "kernel has " + std::to_string(brute.size()) + " elements";
  return r;
}

ConditionReport check_condition4(Natural n, Natural m, const BCDatum& datum) {
  require_positive(n, "n");
  require_positive(m, "M");
  ConditionReport r;
  r.condition = 4;
  r.params = {{"n", n}, {"M", m}};
  const auto kernel_n = datum.kernel(n);
  std::map<QZElement, Natural> hits;
  for (const auto& x : level(n * m)) hits[x] = 0;
  bool stays_in_level = true;
  for (std::size_t k = 0; k < kernel_n.size(); ++k) {
    for (const auto& y : level(m)) {
      QZElement x = kernel_n[k] + datum.section(n, y);
      auto it = hits.find(x);
      if (it == hits.end()) {
        stays_in_level = false;
      } else {
        ++it->second;
      }
    }
  }
  r.ok = stays_in_level;
  for (const auto& [x, count] : hits) {
    ++r.cells;
    if (count != 1) {
      r.ok = false;
      if (r.detail.empty()) r.detail = x.str() + " has " + std::to_string(count) + " decompositions";
    }
  }
  return r;
}

ConditionReport check_condition5(Natural p, Natural q, const BCDatum& datum) {
  if (!is_prime(p) || !is_prime(q)) throw DomainError("condition (5) needs primes");
  if (p == q) throw DomainError("condition (5) needs distinct primes");
  ConditionReport r;
  r.condition = 5;
  r.params = {{"p", p}, {"q", q}};
  r.ok = true;
  const auto kp = datum.kernel(p);
  const auto kq = datum.kernel(q);
  for (Natural i = 0; i < p; ++i) {
    for (Natural j = 0; j < q; ++j) {
      ++r.cells;
      const Natural n = i * q + j;
      const Natural l = n / p;
      const Natural k = n % p;
      const QZElement lhs = datum.section(p, kq[j]) + kp[i];
      const QZElement rhs = datum.section(q, kp[k]) + kq[l];
      const bool swap_ok = lhs == rhs;
      const bool power_ok = datum.sigma(p, kq[j]) == kq[(p * j) % q];
      if (!(swap_ok && power_ok) && r.ok) {
        r.detail = "fails at i=" + std::to_string(i) + ", j=" + std::to_string(j);
        r.ok = false;
      }
    }
  }
  return r;
}

QZElement apply_operator(const Letter& l, const QZElement& x, const BCDatum& datum) {
  if (l.is_power()) return datum.sigma(l.p, x);
  return datum.section(l.p, x) + datum.kernel_element(l.p, l.i);
}

std::set<QZElement> rho(Natural p, const QZElement& x, const BCDatum& datum) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::set<QZElement> out;
  for (Natural i = 0; i < p; ++i) out.insert(apply_operator(Letter{p, i}, x, datum));
  return out;
}

PresheafValue presheaf_value(const ConwayWord& x, Natural level_n, const BCDatum& datum) {
  require_positive(level_n, "level");
  const ConwayWord w = normalize(x);
  PresheafValue out;
  out.level = level_n;
  const auto base = level(level_n);
  out.elements.insert(base.begin(), base.end());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->is_power()) continue;  // the K_X block only selects Σ_{K_X}
    std::set<QZElement> next;
    for (const auto& e : out.elements) next.insert(apply_operator(*it, e, datum));
    out.elements = std::move(next);
    out.level *= it->p;
  }
  return out;
}

}  // namespace arsite

#include "arsite/dessin.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "arsite/error.hpp"

namespace arsite {

namespace {

void check_perm(const Perm& p, std::size_t n, const char* name) {
  if (p.size() != n) throw DomainError(std::string(name) + " has the wrong length");
  std::vector<char> seen(n, 0);
  for (std::size_t x : p) {
    if (x >= n || seen[x]) throw DomainError(std::string(name) + " is not a permutation");
    seen[x] = 1;
  }
}

// cycle_of[e] = index of the cycle containing e.
std::vector<std::size_t> cycle_index(const Perm& p) {
  std::vector<std::size_t> out(p.size(), p.size());
  std::size_t next = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (out[s] != p.size()) continue;
    for (std::size_t e = s; out[e] == p.size(); e = p[e]) out[e] = next;
    ++next;
  }
  return out;
}

std::size_t cycle_length(const Perm& p, std::size_t e) {
  std::size_t len = 1;
  for (std::size_t f = p[e]; f != e; f = p[f]) ++len;
  return len;
}

Partition sorted_desc(Partition parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::string partition_str(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

// Relabels edges in breadth-first order from `start`, following alpha then beta.
std::vector<std::size_t> bfs_labels(const FramedDessin& d, std::size_t start) {
  std::vector<std::size_t> label(d.n, d.n);
  std::deque<std::size_t> queue{start};
  label[start] = 0;
  std::size_t next = 1;
  while (!queue.empty()) {
    std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t f : {d.alpha[e], d.beta[e]}) {
      if (label[f] == d.n) {
        label[f] = next++;
        queue.push_back(f);
      }
    }
  }
  if (next != d.n) throw DomainError("dessin is not connected");
  return label;
}

FramedDessin relabel(const FramedDessin& d, const std::vector<std::size_t>& label) {
  FramedDessin out;
  out.n = d.n;
  out.alpha.assign(d.n, 0);
  out.beta.assign(d.n, 0);
  for (std::size_t e = 0; e < d.n; ++e) {
    out.alpha[label[e]] = label[d.alpha[e]];
    out.beta[label[e]] = label[d.beta[e]];
  }
  out.frame_black = label[d.frame_black];
  out.frame_white = label[d.frame_white];
  return out;
}

std::size_t min_in_cycle(const Perm& p, std::size_t e) {
  std::size_t best = e;
  for (std::size_t f = p[e]; f != e; f = p[f]) best = std::min(best, f);
  return best;
}

}  // namespace

std::string Passport::str() const { return "[" + partition_str(black) + "," + partition_str(white) + "]"; }

std::string FramedDessin::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["alpha"] = alpha;
  j["beta"] = beta;
  j["frame_black"] = frame_black;
  j["frame_white"] = frame_white;
  return j.dump();
}

FramedDessin FramedDessin::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    FramedDessin d;
    d.n = j.at("n").get<std::size_t>();
    d.alpha = j.at("alpha").get<Perm>();
    d.beta = j.at("beta").get<Perm>();
    d.frame_black = j.at("frame_black").get<std::size_t>();
    d.frame_white = j.at("frame_white").get<std::size_t>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad dessin JSON: ") + e.what());
  }
}

FramedDessin unit_dessin() { return FramedDessin{}; }

std::vector<std::vector<std::size_t>> cycles(const Perm& p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t e = s; !seen[e]; e = p[e]) {
      seen[e] = 1;
      cyc.push_back(e);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm compose_perms(const Perm& first, const Perm& then) {
  Perm out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = then[first[x]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = x;
  return out;
}

void validate(const FramedDessin& d) {
  if (d.n == 0) throw DomainError("a dessin needs at least one edge");
  check_perm(d.alpha, d.n, "alpha");
  check_perm(d.beta, d.n, "beta");
  if (d.frame_black >= d.n || d.frame_white >= d.n) throw DomainError("frame edge out of range");
  if (cycles(d.alpha).size() + cycles(d.beta).size() != d.n + 1) throw DomainError("not a tree");
  if (cycles(compose_perms(d.alpha, d.beta)).size() != 1) throw DomainError("not of polynomial type");
}

Passport passport(const FramedDessin& d) {
  Passport out;
  for (const auto& c : cycles(d.alpha)) out.black.push_back(c.size());
  for (const auto& c : cycles(d.beta)) out.white.push_back(c.size());
  out.black = sorted_desc(std::move(out.black));
  out.white = sorted_desc(std::move(out.white));
  return out;
}

std::size_t valency_black0(const FramedDessin& d) { return cycle_length(d.alpha, d.frame_black); }
std::size_t valency_white1(const FramedDessin& d) { return cycle_length(d.beta, d.frame_white); }

FramedDessin e_dessin(std::size_t d, std::size_t k) {
  if (d < 1 || k >= d) throw DomainError("e_dessin needs 0 <= k < d");
  FramedDessin out;
  out.n = d;
  out.alpha.resize(d);
  out.beta.resize(d);
  for (std::size_t e = 0; e < d; ++e) {
    out.alpha[e] = e;
    out.beta[e] = e;
  }
  // Black vertex 0: edges 0, 1, ..., d-k-1 in cyclic order.
  for (std::size_t e = 0; e < d - k; ++e) out.alpha[e] = (e + 1) % (d - k);
  // White vertex 1: edges 0, d-k, ..., d-1.
  std::vector<std::size_t> white{0};
  for (std::size_t e = d - k; e < d; ++e) white.push_back(e);
  for (std::size_t i = 0; i < white.size(); ++i) out.beta[white[i]] = white[(i + 1) % white.size()];
  out.frame_black = 0;
  out.frame_white = 0;
  return out;
}

Anatomy anatomy(const FramedDessin& d) {
  validate(d);
  const auto black_of = cycle_index(d.alpha);
  const auto white_of = cycle_index(d.beta);
  const std::size_t nb = *std::max_element(black_of.begin(), black_of.end()) + 1;
  const std::size_t nw = *std::max_element(white_of.begin(), white_of.end()) + 1;
  // Vertex ids: blacks 0..nb-1, whites nb..nb+nw-1.
  const std::size_t nv = nb + nw;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);  // (neighbour, edge)
  for (std::size_t e = 0; e < d.n; ++e) {
    adj[black_of[e]].emplace_back(nb + white_of[e], e);
    adj[nb + white_of[e]].emplace_back(black_of[e], e);
  }
  const std::size_t v0 = black_of[d.frame_black];
  const std::size_t v1 = nb + white_of[d.frame_white];

  // Spine by BFS parents from v0.
  std::vector<std::size_t> parent_edge(nv, d.n), parent(nv, nv);
  std::vector<char> seen(nv, 0);
  std::deque<std::size_t> queue{v0};
  seen[v0] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      parent_edge[w] = e;
      queue.push_back(w);
    }
  }
  Anatomy out;
  std::vector<char> on_spine_edge(d.n, 0), on_spine_vertex(nv, 0);
  for (std::size_t v = v1; v != v0; v = parent[v]) {
    out.spine.push_back(parent_edge[v]);
    on_spine_edge[parent_edge[v]] = 1;
    on_spine_vertex[v] = 1;
  }
  on_spine_vertex[v0] = 1;
  std::reverse(out.spine.begin(), out.spine.end());
  out.spine_edge_black = out.spine.front();
  out.spine_edge_white = out.spine.back();
  out.valency0 = cycle_length(d.alpha, d.frame_black);
  out.valency1 = cycle_length(d.beta, d.frame_white);

  // Branch components hanging off the spine vertices, away from the spine.
  enum Part { kHead, kBody, kTail };
  std::vector<int> part_of_vertex(nv, kBody);
  std::vector<int> part_of_edge(d.n, kBody);
  auto flood = [&](std::size_t root, int part) {
    std::vector<std::size_t> stack{root};
    std::vector<char> visited(nv, 0);
    visited[root] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[v]) {
        if (on_spine_edge[e] || visited[w]) continue;
        visited[w] = 1;
        part_of_vertex[w] = part;
        part_of_edge[e] = part;
        stack.push_back(w);
      }
    }
  };
  flood(v0, kHead);
  flood(v1, kTail);

  auto degree = [&](std::size_t v) { return adj[v].size(); };
  Passport* parts[3] = {&out.head, &out.body, &out.tail};
  for (std::size_t v = 0; v < nv; ++v) {
    if (v == v0 || v == v1) continue;
    Passport& target = *parts[part_of_vertex[v]];
    (v < nb ? target.black : target.white).push_back(degree(v));
  }
  for (Passport* p : parts) {
    p->black = sorted_desc(std::move(p->black));
    p->white = sorted_desc(std::move(p->white));
  }
  for (std::size_t e = 0; e < d.n; ++e) {
    if (on_spine_edge[e]) continue;
    std::vector<std::size_t>* bins[3] = {&out.head_edges, &out.body_edges, &out.tail_edges};
    bins[part_of_edge[e]]->push_back(e);
  }
  return out;
}

FramedDessin compose(const FramedDessin& t, const FramedDessin& t2) {
  const Anatomy at = anatomy(t);
  const Anatomy at2 = anatomy(t2);
  const std::size_t m = t2.n;
  const std::size_t e0 = at.spine_edge_black;
  const std::size_t e1 = at.spine_edge_white;
  FramedDessin out;
  out.n = t.n * m;
  out.alpha.resize(out.n);
  out.beta.resize(out.n);
  for (std::size_t e = 0; e < t.n; ++e) {
    for (std::size_t f = 0; f < m; ++f) {
      out.alpha[e * m + f] = t.alpha[e] * m + (e == e0 ? t2.alpha[f] : f);
      out.beta[e * m + f] = t.beta[e] * m + (e == e1 ? t2.beta[f] : f);
    }
  }
  out.frame_black = e0 * m + at2.spine_edge_black;
  out.frame_white = e1 * m + at2.spine_edge_white;
  return out;
}

Passport passport_compose_predict(const Anatomy& t, const Passport& t2, std::size_t d2) {
  Passport out;
  for (std::size_t copy = 0; copy < d2; ++copy) {
    for (const Passport* part : {&t.head, &t.body, &t.tail}) {
      out.black.insert(out.black.end(), part->black.begin(), part->black.end());
      out.white.insert(out.white.end(), part->white.begin(), part->white.end());
    }
  }
  for (std::size_t b : t2.black) out.black.push_back(t.valency0 * b);
  for (std::size_t w : t2.white) out.white.push_back(t.valency1 * w);
  out.black = sorted_desc(std::move(out.black));
  out.white = sorted_desc(std::move(out.white));
  return out;
}

std::vector<Perm> automorphisms(const FramedDessin& d) {
  validate(d);
  std::vector<Perm> out;
  for (std::size_t target = 0; target < d.n; ++target) {
    Perm phi(d.n, d.n);
    phi[0] = target;
    std::deque<std::size_t> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      std::size_t e = queue.front();
      queue.pop_front();
      const std::pair<std::size_t, std::size_t> steps[2] = {{d.alpha[e], d.alpha[phi[e]]},
                                                            {d.beta[e], d.beta[phi[e]]}};
      for (auto [src, dst] : steps) {
        if (phi[src] == d.n) {
          phi[src] = dst;
          queue.push_back(src);
        } else if (phi[src] != dst) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> hit(d.n, 0);
    for (std::size_t x : phi) {
      if (x >= d.n || hit[x]) {
        ok = false;
        break;
      }
      hit[x] = 1;
    }
    if (ok) out.push_back(std::move(phi));
  }
  return out;
}

bool is_cyclic_group(const std::vector<Perm>& group) {
  if (group.empty()) return false;
  const std::set<Perm> elements(group.begin(), group.end());
  for (const Perm& g : group) {
    std::set<Perm> powers;
    Perm cur = g;
    while (powers.insert(cur).second) cur = compose_perms(cur, g);
    if (powers == elements) return true;
  }
  return false;
}

std::optional<std::size_t> monodromy_order(const FramedDessin& d, std::size_t cap) {
  validate(d);
  Perm id(d.n);
  for (std::size_t i = 0; i < d.n; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm g = queue.front();
    queue.pop_front();
    for (const Perm* gen : {&d.alpha, &d.beta}) {
      Perm h = compose_perms(g, *gen);
      if (seen.insert(h).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(h));
      }
    }
  }
  return seen.size();
}

bool is_transitive(const FramedDessin& d) {
  std::vector<char> seen(d.n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t e = stack.back();
    stack.pop_back();
    for (std::size_t f : {d.alpha[e], d.beta[e]}) {
      if (!seen[f]) {
        seen[f] = 1;
        ++count;
        stack.push_back(f);
      }
    }
  }
  return count == d.n;
}

FramedDessin involution(const FramedDessin& d) {
  FramedDessin out = d;
  std::swap(out.alpha, out.beta);
  std::swap(out.frame_black, out.frame_white);
  return out;
}

FramedDessin canonical_form(const FramedDessin& d) {
  validate(d);
  std::optional<FramedDessin> best;
  std::size_t e = d.frame_black;
  do {
    FramedDessin c = relabel(d, bfs_labels(d, e));
    c.frame_black = 0;
    c.frame_white = min_in_cycle(c.beta, c.frame_white);
    if (!best || std::tie(c.alpha, c.beta, c.frame_white) <
                     std::tie(best->alpha, best->beta, best->frame_white)) {
      best = std::move(c);
    }
    e = d.alpha[e];
  } while (e != d.frame_black);
  return *best;
}

FramedDessin unframed_canonical_form(const FramedDessin& d) {
  validate(d);
  std::optional<FramedDessin> best;
  for (std::size_t e = 0; e < d.n; ++e) {
    FramedDessin c = relabel(d, bfs_labels(d, e));
    c.frame_black = 0;
    c.frame_white = 0;
    if (!best || std::tie(c.alpha, c.beta) < std::tie(best->alpha, best->beta)) best = std::move(c);
  }
  return *best;
}

bool framed_iso(const FramedDessin& a, const FramedDessin& b) {
  return a.n == b.n && canonical_form(a) == canonical_form(b);
}

bool combinatorial_equiv(const FramedDessin& a, const FramedDessin& b) {
  return a.n == b.n && unframed_canonical_form(a) == unframed_canonical_form(b);
}

std::string dessin_dot(const FramedDessin& d) {
  validate(d);
  const auto black_of = cycle_index(d.alpha);
  const auto white_of = cycle_index(d.beta);
  const std::size_t nb = *std::max_element(black_of.begin(), black_of.end()) + 1;
  const std::size_t nw = *std::max_element(white_of.begin(), white_of.end()) + 1;
  std::ostringstream os;
  os << "graph dessin {\n";
  for (std::size_t b = 0; b < nb; ++b) {
    os << "  b" << b << " [shape=circle, style=filled, fillcolor=black, fontcolor=white, label=\""
       << (b == black_of[d.frame_black] ? "0" : "") << "\"];\n";
  }
  for (std::size_t w = 0; w < nw; ++w) {
    os << "  w" << w << " [shape=circle, style=filled, fillcolor=white, label=\""
       << (w == white_of[d.frame_white] ? "1" : "") << "\"];\n";
  }
  for (std::size_t e = 0; e < d.n; ++e) {
    os << "  b" << black_of[e] << " -- w" << white_of[e] << " [label=\"" << e << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace arsite

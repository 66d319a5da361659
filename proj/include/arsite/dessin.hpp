#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arsite {

using Perm = std::vector<std::size_t>;

// Multiset of positive parts, kept sorted in descending order.
using Partition = std::vector<std::size_t>;

struct Passport {
  Partition black;
  Partition white;

  friend bool operator==(const Passport&, const Passport&) = default;
  std::string str() const;
};

// A framed bicolored plane tree on edges {0, ..., n-1}. alpha lists the
// counter-clockwise edge order around black vertices, beta around white
// vertices. The black vertex 0 is the alpha-cycle of frame_black and the
// white vertex 1 is the beta-cycle of frame_white.
struct FramedDessin {
  std::size_t n = 1;
  Perm alpha{0};
  Perm beta{0};
  std::size_t frame_black = 0;
  std::size_t frame_white = 0;

  friend bool operator==(const FramedDessin&, const FramedDessin&) = default;

  std::string to_json() const;
  static FramedDessin from_json(std::string_view text);
};

// The single-edge dessin of B = x, the unit for composition.
FramedDessin unit_dessin();

// Throws DomainError with "not a tree" or "not of polynomial type".
void validate(const FramedDessin& d);

std::vector<std::vector<std::size_t>> cycles(const Perm& p);
Perm compose_perms(const Perm& first, const Perm& then);  // x -> then(first(x))
Perm inverse(const Perm& p);

Passport passport(const FramedDessin& d);
std::size_t valency_black0(const FramedDessin& d);
std::size_t valency_white1(const FramedDessin& d);

// Star-of-stars tree: black vertex 0 of valency d-k joined to white vertex 1
// (edge 0) and to d-k-1 white leaves; vertex 1 carries k black leaves.
FramedDessin e_dessin(std::size_t d, std::size_t k);

// Spine, head, body and tail. Passports of the parts list the valencies of
// their vertices other than 0 and 1, ordered (black, white).
struct Anatomy {
  std::vector<std::size_t> spine;  // edge path from vertex 0 to vertex 1
  std::size_t spine_edge_black = 0;  // e_0
  std::size_t spine_edge_white = 0;  // e_1
  std::vector<std::size_t> head_edges, body_edges, tail_edges;
  Passport head, body, tail;
  std::size_t valency0 = 0;  // i
  std::size_t valency1 = 0;  // j
};

Anatomy anatomy(const FramedDessin& d);

// Edge (e, f) of the composite is e * t2.n + f.
FramedDessin compose(const FramedDessin& t, const FramedDessin& t2);

// Passport of t ∘ t2 from the anatomy of t and the passport of t2, where
// `d2` is the number of edges of t2.
Passport passport_compose_predict(const Anatomy& t, const Passport& t2, std::size_t d2);

// Edge permutations commuting with alpha and beta (frames ignored).
std::vector<Perm> automorphisms(const FramedDessin& d);
bool is_cyclic_group(const std::vector<Perm>& group);
// |<alpha, beta>|, or nullopt once the closure exceeds `cap` elements.
std::optional<std::size_t> monodromy_order(const FramedDessin& d, std::size_t cap);
bool is_transitive(const FramedDessin& d);

// Colour reversal swapping vertices 0 and 1.
FramedDessin involution(const FramedDessin& d);

// Relabeling anchored at the framed vertices; equal for framed-isomorphic
// dessins.
FramedDessin canonical_form(const FramedDessin& d);
// Frame-free canonical relabeling; frames of the result are set to edge 0.
FramedDessin unframed_canonical_form(const FramedDessin& d);
bool framed_iso(const FramedDessin& a, const FramedDessin& b);
bool combinatorial_equiv(const FramedDessin& a, const FramedDessin& b);

std::string dessin_dot(const FramedDessin& d);

}  // namespace arsite

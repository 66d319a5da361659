#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arsite/arboreal.hpp"
#include "arsite/belyi.hpp"
#include "arsite/bigpicture.hpp"
#include "arsite/bost_connes.hpp"
#include "arsite/conway.hpp"
#include "arsite/dessin.hpp"
#include "arsite/error.hpp"
#include "arsite/points.hpp"
#include "arsite/supernatural.hpp"

namespace arsite::cli {

namespace {

const std::set<std::string> kBareBigPictureVerbs = {"distance", "neighbours", "fiber", "psi", "ball-dot"};

// "@path" reads the file, anything else is taken literally.
std::string slurp(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseError("cannot read " + arg.substr(1));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ConwayWord word_arg(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    try {
      ConwayWord w;
      for (const auto& l : nlohmann::json::parse(text)) w.push_back(make_letter(l.at(0).get<Natural>(), l.at(1).get<Natural>()));
      return w;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad word JSON: ") + e.what());
    }
  }
  return parse_word(text);
}

std::string word_json(const ConwayWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const Letter& l : w) j.push_back({l.p, l.i});
  return j.dump();
}

FramedDessin dessin_arg(const std::string& text) {
  FramedDessin d = FramedDessin::from_json(slurp(text));
  validate(d);
  return d;
}

BelyiPoly belyi_arg(const std::string& text) { return BelyiPoly(PolyQ::parse(text)); }

std::vector<BelyiPoly> belyi_args(const std::vector<std::string>& texts) {
  std::vector<BelyiPoly> out;
  for (const auto& t : texts) out.push_back(belyi_arg(t));
  return out;
}

std::vector<Natural> parse_naturals(const std::string& csv) {
  std::vector<Natural> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      if (item.empty() || item.front() == '-') throw std::invalid_argument(item);
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad natural '" + item + "'");
    }
  }
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

// Storage shared by all verbs; only one verb runs per invocation.
struct Args {
  std::string a, b;
  Natural n = 0, m = 0;
  std::vector<std::string> rest;
  std::vector<Natural> numbers;
  std::string primes = "2,3";
  std::string alpha = "1/2";
  Natural radius = 1;
  Natural period = 0;
  Natural cap = 100000;
  Natural maxlen = 3;
  double tol = static_cast<double>(kDefaultTol);
  bool count = false;
  bool json = false;
  bool random = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

void add_bigpicture(CLI::App& app, Args& a, std::ostream& out) {
  auto* bp = app.add_subcommand("bp", "Big picture of commensurability classes")->alias("bigpicture");
  bp->require_subcommand(1);

  auto* distance = bp->add_subcommand("distance", "Hyper-distance between two classes M:g/h");
  distance->add_option("x", a.a)->required();
  distance->add_option("y", a.b)->required();
  distance->callback([&] { out << hyperdistance(PicClass::parse(a.a), PicClass::parse(a.b)) << "\n"; });

  auto* nb = bp->add_subcommand("neighbours", "Classes at hyper-distance p")->alias("neighbors");
  nb->add_option("x", a.a)->required();
  nb->add_option("p", a.n)->required();
  nb->callback([&] {
    for (const auto& y : neighbours(PicClass::parse(a.a), a.n)) out << y.str() << "\n";
  });

  auto* fib = bp->add_subcommand("fiber", "Classes at hyper-distance n from 1:0");
  fib->add_option("n", a.n)->required();
  fib->add_flag("--count", a.count, "Print only the number of classes");
  fib->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  fib->callback([&] {
    const auto f = fiber(a.n, a.jobs);
    if (a.count) {
      out << f.size() << "\n";
      return;
    }
    for (const auto& x : f) out << x.str() << "\n";
  });

  auto* ps = bp->add_subcommand("psi", "Dedekind psi");
  ps->add_option("n", a.n)->required();
  ps->callback([&] { out << psi(a.n) << "\n"; });

  auto* dot = bp->add_subcommand("ball-dot", "DOT rendering of a ball around a class");
  dot->add_option("centre", a.a)->required();
  dot->add_option("--primes", a.primes, "Comma-separated primes");
  dot->add_option("--radius", a.radius);
  dot->callback([&] {
    const auto primes = parse_naturals(a.primes);
    out << ball_dot(PicClass::parse(a.a), primes, a.radius);
  });
}

void add_conway(CLI::App& app, Args& a, std::ostream& out) {
  auto* cw = app.add_subcommand("cw", "Conway monoid words")->alias("conway");
  cw->require_subcommand(1);
  cw->add_flag("--json", a.json, "Print words as [[p,i],...]");
  auto show = [&](const ConwayWord& w) { out << (a.json ? word_json(w) : word_str(w)) << "\n"; };

  auto* norm = cw->add_subcommand("normalize", "Normal form of a word");
  norm->add_option("word", a.a)->required();
  norm->add_flag("--random", a.random, "Apply rewrites in a random order");
  norm->callback([&, show] {
    std::mt19937_64 rng(a.seed);
    show(normalize(word_arg(a.a), a.random ? &rng : nullptr));
  });

  auto* mu = cw->add_subcommand("mul", "Product of two words");
  mu->add_option("w1", a.a)->required();
  mu->add_option("w2", a.b)->required();
  mu->callback([&, show] { show(mul(word_arg(a.a), word_arg(a.b))); });

  auto* w2c = cw->add_subcommand("word2class", "Class of a word");
  w2c->add_option("word", a.a)->required();
  w2c->callback([&] { out << word_to_class(word_arg(a.a)).str() << "\n"; });

  auto* c2w = cw->add_subcommand("class2word", "Normal word of a class");
  c2w->add_option("class", a.a)->required();
  c2w->callback([&, show] { show(class_to_word(PicClass::parse(a.a))); });

  auto* de = cw->add_subcommand("delta", "Hyper-distance of a word from 1");
  de->add_option("word", a.a)->required();
  de->callback([&] { out << delta(word_arg(a.a)) << "\n"; });

  auto* dv = cw->add_subcommand("divide", "Z with y = Z*x in the monoid, or 'none'");
  dv->add_option("y", a.a)->required();
  dv->add_option("x", a.b)->required();
  dv->callback([&, show] {
    const auto z = divide_left(word_arg(a.a), word_arg(a.b));
    if (z) {
      show(*z);
    } else {
      out << "none\n";
    }
  });
}

void add_supernatural(CLI::App& app, Args& a, std::ostream& out) {
  auto* sn = app.add_subcommand("sn", "Supernatural numbers")->alias("supernatural");
  sn->require_subcommand(1);

  auto* chain = sn->add_subcommand("chain", "Supremum of a divisibility chain");
  chain->add_option("entries", a.numbers, "Comma-separated chain")->required()->delimiter(',');
  chain->add_option("--period", a.period, "Number of trailing steps repeating forever");
  chain->callback([&] { out << Supernatural::from_chain(a.numbers, a.period).str() << "\n"; });

  auto* eq = sn->add_subcommand("equiv", "Adele class equivalence");
  eq->add_option("s", a.a)->required();
  eq->add_option("t", a.b)->required();
  eq->callback([&] { out << boolean(adele_class_equiv(Supernatural::parse(a.a), Supernatural::parse(a.b))) << "\n"; });

  auto* dv = sn->add_subcommand("divides", "Exponent-wise divisibility s | t");
  dv->add_option("s", a.a)->required();
  dv->add_option("t", a.b)->required();
  dv->callback([&] { out << boolean(divides(Supernatural::parse(a.a), Supernatural::parse(a.b))) << "\n"; });

  auto* lc = sn->add_subcommand("lcm", "Least common multiple");
  lc->add_option("s", a.a)->required();
  lc->add_option("t", a.b)->required();
  lc->callback([&] { out << lcm(Supernatural::parse(a.a), Supernatural::parse(a.b)).str() << "\n"; });

  auto* op = sn->add_subcommand("open", "Membership in the open generated by n_1 N, ..., n_k N");
  op->add_option("s", a.a)->required();
  op->add_option("generators", a.numbers, "Comma-separated naturals")->required()->delimiter(',');
  op->callback([&] { out << boolean(in_open(Supernatural::parse(a.a), a.numbers)) << "\n"; });
}

void add_dessins(CLI::App& app, Args& a, std::ostream& out) {
  auto* ds = app.add_subcommand("ds", "Framed tree dessins (JSON or @file)")->alias("dessins");
  ds->require_subcommand(1);

  auto* pp = ds->add_subcommand("passport", "Black and white valencies");
  pp->add_option("dessin", a.a)->required();
  pp->callback([&] { out << passport(dessin_arg(a.a)).str() << "\n"; });

  auto* co = ds->add_subcommand("compose", "Composite dessin t o t2");
  co->add_option("t", a.a)->required();
  co->add_option("t2", a.b)->required();
  co->callback([&] { out << compose(dessin_arg(a.a), dessin_arg(a.b)).to_json() << "\n"; });

  auto* iso = ds->add_subcommand("iso", "Framed isomorphism");
  iso->add_option("d1", a.a)->required();
  iso->add_option("d2", a.b)->required();
  iso->callback([&] { out << boolean(framed_iso(dessin_arg(a.a), dessin_arg(a.b))) << "\n"; });

  auto* eq = ds->add_subcommand("equiv", "Combinatorial equivalence");
  eq->add_option("d1", a.a)->required();
  eq->add_option("d2", a.b)->required();
  eq->callback([&] { out << boolean(combinatorial_equiv(dessin_arg(a.a), dessin_arg(a.b))) << "\n"; });

  auto* au = ds->add_subcommand("auto", "Automorphism group");
  au->add_option("dessin", a.a)->required();
  au->callback([&] {
    const auto group = automorphisms(dessin_arg(a.a));
    nlohmann::ordered_json j;
    j["order"] = group.size();
    j["cyclic"] = is_cyclic_group(group);
    j["elements"] = group;
    out << j.dump() << "\n";
  });

  auto* mo = ds->add_subcommand("monodromy", "Order of the monodromy group");
  mo->add_option("dessin", a.a)->required();
  mo->add_option("--cap", a.cap, "Give up beyond this many elements");
  mo->callback([&] {
    const auto order = monodromy_order(dessin_arg(a.a), a.cap);
    if (!order) throw DomainError("monodromy group exceeds " + std::to_string(a.cap) + " elements");
    out << *order << "\n";
  });

  auto* inv = ds->add_subcommand("involution", "Colour reversal");
  inv->add_option("dessin", a.a)->required();
  inv->callback([&] { out << involution(dessin_arg(a.a)).to_json() << "\n"; });

  auto* edk = ds->add_subcommand("edk", "The dessin E_{d,k}");
  edk->add_option("d", a.n)->required();
  edk->add_option("k", a.m)->required();
  edk->callback([&] { out << e_dessin(a.n, a.m).to_json() << "\n"; });

  auto* dot = ds->add_subcommand("dot", "DOT rendering");
  dot->add_option("dessin", a.a)->required();
  dot->callback([&] { out << dessin_dot(dessin_arg(a.a)); });
}

void add_belyi(CLI::App& app, Args& a, std::ostream& out) {
  auto* by = app.add_subcommand("by", "Dynamical Belyi polynomials")->alias("belyi");
  by->require_subcommand(1);

  auto* bdk = by->add_subcommand("bdk", "The polynomial B_{d,k}");
  bdk->add_option("d", a.n)->required();
  bdk->add_option("k", a.m)->required();
  bdk->callback([&] { out << b_dk(a.n, a.m).poly().str() << "\n"; });

  auto* ch = by->add_subcommand("check", "Is the polynomial dynamical Belyi");
  ch->add_option("poly", a.a)->required();
  ch->callback([&] { out << boolean(is_dynamical_belyi(PolyQ::parse(a.a))) << "\n"; });

  auto* be = by->add_subcommand("beta", "Image in the big picture");
  be->add_option("poly", a.a)->required();
  be->callback([&] {
    const BelyiPoly b = belyi_arg(a.a);
    out << beta_class(b).str() << " " << word_str(beta_word(b)) << "\n";
  });

  auto* tr = by->add_subcommand("triangle", "Check hyper-distance(1, beta(B)) = deg B");
  tr->add_option("poly", a.a)->required();
  tr->callback([&] { out << boolean(triangle_check(belyi_arg(a.a))) << "\n"; });

  auto* cc = by->add_subcommand("compose-count", "Check the black-vertex count of a composite");
  cc->add_option("outer", a.a)->required();
  cc->add_option("inner", a.b)->required();
  cc->callback([&] {
    const BelyiPoly b = belyi_arg(a.a);
    const BelyiPoly b2 = belyi_arg(a.b);
    out << black_count(compose(b, b2)) << " " << boolean(compose_count_check(b, b2)) << "\n";
  });

  auto* fr = by->add_subcommand("free", "Distinct polynomials for all words up to --maxlen");
  fr->add_option("generators", a.rest)->required();
  fr->add_option("--maxlen", a.maxlen);
  fr->callback([&] { out << boolean(free_check(belyi_args(a.rest), a.maxlen)) << "\n"; });
}

void add_bost_connes(CLI::App& app, Args& a, std::ostream& out) {
  auto* bc = app.add_subcommand("bc", "Bost-Connes datum on Q/Z")->alias("bost-connes");
  bc->require_subcommand(1);

  auto* c3 = bc->add_subcommand("cond3", "Kernel of sigma_n");
  c3->add_option("n", a.n)->required();
  c3->callback([&] { out << check_condition3(a.n).to_json() << "\n"; });

  auto* c4 = bc->add_subcommand("cond4", "Unique translate decomposition at level nM");
  c4->add_option("n", a.n)->required();
  c4->add_option("M", a.m)->required();
  c4->callback([&] { out << check_condition4(a.n, a.m).to_json() << "\n"; });

  auto* c5 = bc->add_subcommand("cond5", "Exchange identities for primes p != q");
  c5->add_option("p", a.n)->required();
  c5->add_option("q", a.m)->required();
  c5->callback([&] { out << check_condition5(a.n, a.m).to_json() << "\n"; });

  auto* op = bc->add_subcommand("op", "Apply a letter P[p,i] to x");
  op->add_option("letter", a.a)->required();
  op->add_option("x", a.b)->required();
  op->callback([&] {
    const ConwayWord w = parse_word(a.a);
    if (w.size() != 1) throw ParseError("expected a single letter");
    out << apply_operator(w.front(), QZElement::parse(a.b)).str() << "\n";
  });

  auto* rh = bc->add_subcommand("rho", "Preimages of x under sigma_p");
  rh->add_option("p", a.n)->required();
  rh->add_option("x", a.b)->required();
  rh->callback([&] {
    std::string sep;
    for (const auto& y : rho(a.n, QZElement::parse(a.b))) {
      out << sep << y.str();
      sep = " ";
    }
    out << "\n";
  });

  auto* ps = bc->add_subcommand("presheaf", "Value of the presheaf on a word, truncated at level N");
  ps->add_option("word", a.a)->required();
  ps->add_option("N", a.n)->required();
  ps->callback([&] {
    const auto v = presheaf_value(word_arg(a.a), a.n);
    nlohmann::ordered_json j;
    j["level"] = v.level;
    j["elements"] = nlohmann::json::array();
    for (const auto& e : v.elements) j["elements"].push_back(e.str());
    out << j.dump() << "\n";
  });
}

void add_arboreal(CLI::App& app, Args& a, std::ostream& out) {
  auto* ar = app.add_subcommand("ar", "Arboreal preimage trees")->alias("arboreal");
  ar->require_subcommand(1);

  auto* ge = ar->add_subcommand("generic", "B(alpha) avoids 0 and 1 for every generator");
  ge->add_option("generators", a.rest)->required();
  ge->add_option("--alpha", a.alpha);
  ge->callback([&] { out << boolean(genericity_check(belyi_args(a.rest), Rational::parse(a.alpha))) << "\n"; });

  auto* sq = ar->add_subcommand("squarefree", "Exact squarefree check of level n");
  sq->add_option("generators", a.rest)->required();
  sq->add_option("--alpha", a.alpha);
  sq->add_option("--level", a.n)->required();
  sq->callback([&] {
    out << boolean(squarefree_level(belyi_args(a.rest), Rational::parse(a.alpha), a.n)) << "\n";
  });

  auto build = [&] {
    return build_tree(belyi_args(a.rest), Rational::parse(a.alpha), a.n, static_cast<long double>(a.tol));
  };
  for (const char* name : {"tree", "dot"}) {
    const bool dot = std::string(name) == "dot";
    auto* cmd = ar->add_subcommand(name, dot ? "DOT rendering of the tree" : "JSON tree with [re, im] values");
    cmd->add_option("generators", a.rest)->required();
    cmd->add_option("--alpha", a.alpha);
    cmd->add_option("--depth", a.n)->required();
    cmd->add_option("--tol", a.tol)->check(CLI::PositiveNumber);
    cmd->callback([&, dot, build] {
      const ArborealTree t = build();
      out << (dot ? tree_dot(t) : tree_json(t) + "\n");
    });
  }
}

void add_points(CLI::App& app, Args& a, std::ostream& out) {
  auto* pt = app.add_subcommand("pt", "Points as truncated chains (JSON or @file)")->alias("points");
  pt->require_subcommand(1);

  auto* eq = pt->add_subcommand("equiv", "Interleaving equivalence");
  eq->add_option("c1", a.a)->required();
  eq->add_option("c2", a.b)->required();
  eq->callback([&] {
    out << boolean(chain_equiv(TruncatedChain::from_json(slurp(a.a)), TruncatedChain::from_json(slurp(a.b)))) << "\n";
  });

  auto* tl = pt->add_subcommand("tail", "Tail equivalence");
  tl->add_option("c1", a.a)->required();
  tl->add_option("c2", a.b)->required();
  tl->callback([&] {
    out << boolean(tail_equiv(TruncatedChain::from_json(slurp(a.a)), TruncatedChain::from_json(slurp(a.b)))) << "\n";
  });

  auto* pr = pt->add_subcommand("project", "Image in the arithmetic site");
  pr->add_option("chain", a.a)->required();
  pr->callback([&] {
    const TruncatedChain c = project(TruncatedChain::from_json(slurp(a.a)));
    out << c.to_json() << "\n";
    if (c.is_periodic()) out << chain_to_supernatural(c).str() << "\n";
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on Conway's big picture, Bost-Connes data and dynamical Belyi maps", "arsite"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --seed follow the verb
  Args a;
  app.add_option("--seed", a.seed, "Seed for randomized rewriting");

  add_bigpicture(app, a, out);
  add_conway(app, a, out);
  add_supernatural(app, a, out);
  add_dessins(app, a, out);
  add_belyi(app, a, out);
  add_bost_connes(app, a, out);
  add_arboreal(app, a, out);
  add_points(app, a, out);

  std::vector<std::string> argv_storage{"arsite"};
  std::size_t first = 0;
  while (first < args.size() && args[first].starts_with("--")) first += args[first] == "--seed" ? 2 : 1;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i == first && kBareBigPictureVerbs.contains(args[i])) argv_storage.push_back("bp");
    argv_storage.push_back(args[i]);
  }
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace arsite::cli

#include "clarr/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "clarr/monodromy.hpp"

namespace clarr {

const Component &CLArrangement::component(int id) const {
  for (auto &c : components)
    if (c.id == id) return c;
  throw std::out_of_range("no component with id " + std::to_string(id));
}

const Component *CLArrangement::conic() const {
  for (auto &c : components)
    if (c.kind == Component::Kind::Conic) return &c;
  return nullptr;
}

std::vector<int> CLArrangement::slots_of(int id) const {
  std::vector<int> s;
  for (size_t i = 0; i < slot_map.size(); ++i)
    if (slot_map[i] == id) s.push_back(static_cast<int>(i) + 1);
  return s;
}

std::vector<int> CLArrangement::points_on(int id) const {
  auto it = line_point_orders.find(id);
  if (it != line_point_orders.end()) return it->second;
  std::vector<int> pts;
  for (size_t p = 0; p < multiple_points.size(); ++p) {
    auto &c = multiple_points[p].components;
    if (std::find(c.begin(), c.end(), id) != c.end()) pts.push_back(static_cast<int>(p));
  }
  return pts;
}

void CLArrangement::validate() const {
  std::set<int> ids;
  int conics = 0;
  for (auto &c : components) {
    if (!ids.insert(c.id).second) throw std::invalid_argument("duplicate component id " + std::to_string(c.id));
    if (c.kind == Component::Kind::Conic) ++conics;
  }
  if (conics > 1) throw std::invalid_argument("at most one conic is supported");
  for (int id : slot_map)
    if (!ids.count(id)) throw std::invalid_argument("slot refers to unknown component " + std::to_string(id));
  for (auto &c : components) {
    size_t want = c.kind == Component::Kind::Conic ? 2 : 1;
    if (slots_of(c.id).size() != want)
      throw std::invalid_argument("component " + std::to_string(c.id) + " must own " + std::to_string(want) + " slot(s)");
  }
  const Component *q = conic();
  std::set<std::pair<int, int>> line_pairs;
  std::map<int, int> conic_meets;
  for (auto &mp : multiple_points) {
    std::set<int> s(mp.components.begin(), mp.components.end());
    if (s.size() != mp.components.size() || s.size() < 3)
      throw std::invalid_argument("a multiple point needs at least 3 distinct components");
    bool has_conic = false;
    for (int id : s) {
      component(id);
      if (q && id == q->id) has_conic = true;
    }
    if (has_conic != mp.on_conic) throw std::invalid_argument("on_conic flag disagrees with the component list");
    if (has_conic) {
      auto cs = slots_of(q->id);
      if (std::find(cs.begin(), cs.end(), mp.conic_slot) == cs.end())
        throw std::invalid_argument("conic_slot is not one of the conic's slots");
    }
    for (int a : s)
      for (int b : s) {
        if (a >= b) continue;
        bool la = component(a).kind == Component::Kind::Line, lb = component(b).kind == Component::Kind::Line;
        if (la && lb) {
          if (!line_pairs.insert({a, b}).second)
            throw std::invalid_argument("lines " + std::to_string(a) + " and " + std::to_string(b) + " meet at two multiple points");
        } else if (++conic_meets[la ? a : b] > 2) {
          throw std::invalid_argument("a line meets the conic at more than two multiple points");
        }
      }
  }
  for (auto &[id, order] : line_point_orders) {
    std::vector<int> a = order, b;
    for (size_t p = 0; p < multiple_points.size(); ++p) {
      auto &c = multiple_points[p].components;
      if (std::find(c.begin(), c.end(), id) != c.end()) b.push_back(static_cast<int>(p));
    }
    std::sort(a.begin(), a.end());
    if (a != b) throw std::invalid_argument("line_point_orders for " + std::to_string(id) + " does not list its points");
  }
}

ArrGraph graph_of(const CLArrangement &arr) {
  ArrGraph g;
  g.vertices = static_cast<int>(arr.multiple_points.size());
  for (auto &c : arr.components) {
    if (c.kind != Component::Kind::Line) continue;
    auto pts = arr.points_on(c.id);
    for (size_t i = 1; i < pts.size(); ++i) g.edges.push_back({pts[i - 1], pts[i]});
  }
  return g;
}

int beta(const CLArrangement &arr) {
  ArrGraph g = graph_of(arr);
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = g.vertices;
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return static_cast<int>(g.edges.size()) - g.vertices + comps;
}

int v_of(const CLArrangement &arr) {
  int v = 0;
  for (auto &mp : arr.multiple_points) {
    int m = static_cast<int>(mp.components.size());
    v += m * (m - 1) / 2 - m + 1;
  }
  return v;
}

CLArrangement line_arrangement(int lines, const std::vector<std::vector<int>> &points) {
  CLArrangement a;
  for (int i = 1; i <= lines; ++i) {
    a.components.push_back({i, Component::Kind::Line});
    a.slot_map.push_back(i);
  }
  for (auto &p : points) a.multiple_points.push_back({p, false, 0});
  a.validate();
  return a;
}

GroupPresentation cf_candidate(const CLArrangement &arr) {
  arr.validate();
  GroupPresentation p(arr.degree());
  const Component *q = arr.conic();
  std::vector<int> cs;
  if (q) {
    cs = arr.slots_of(q->id);
    p.add(Relation::equality(FreeWord::gen(cs[0]), FreeWord::gen(cs[1])));
  }
  auto line_slot = [&](int id) { return arr.slots_of(id).at(0); };
  std::set<std::pair<int, int>> met;  // line pairs
  std::map<int, std::vector<int>> conic_used;
  for (auto &mp : arr.multiple_points) {
    std::vector<int> slots;
    for (int id : mp.components) {
      if (q && id == q->id) {
        slots.push_back(mp.conic_slot);
      } else {
        slots.push_back(line_slot(id));
        if (q && mp.on_conic) conic_used[id].push_back(mp.conic_slot);
      }
    }
    std::sort(slots.begin(), slots.end());
    p.add(Relation::cyclic_plain(slots));
    for (int a : mp.components)
      for (int b : mp.components)
        if (a < b) met.insert({a, b});
  }
  std::vector<std::pair<int, int>> nodes;
  std::vector<int> lines;
  for (auto &c : arr.components)
    if (c.kind == Component::Kind::Line) lines.push_back(c.id);
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      int a = std::min(lines[i], lines[j]), b = std::max(lines[i], lines[j]);
      if (!met.count({a, b})) nodes.push_back(std::minmax(line_slot(a), line_slot(b)));
    }
  if (q)
    for (int l : lines) {
      auto &used = conic_used[l];
      size_t free_meets = 2 - used.size();
      for (int c : cs) {
        if (free_meets == 0) break;
        if (std::count(used.begin(), used.end(), c)) continue;
        nodes.push_back(std::minmax(line_slot(l), c));
        --free_meets;
      }
    }
  std::sort(nodes.begin(), nodes.end());
  for (auto [a, b] : nodes) p.add(Relation::commute(FreeWord::gen(a), FreeWord::gen(b)));
  return p;
}

std::pair<int, int> an_conic_slots(int n) {
  if (n < 3) throw std::invalid_argument("A_n needs n >= 3");
  if (n % 2) {
    int k = (n - 1) / 2;
    return {k, k + 3};
  }
  int k = n / 2;
  return {k - 1, k + 2};
}

namespace {

std::vector<std::vector<int>> an_triples(int n) {
  std::vector<std::vector<int>> t;
  if (n % 2) {
    int k = (n - 1) / 2;
    if (k == 1) return {{1, 2, 3}, {3, 4, 5}, {1, 2, 5}};
    for (int i = 1; i <= k - 2; ++i) t.push_back({i, i + 1, k});
    t.push_back({k - 1, k, k + 1});
    t.push_back({k, k + 1, k + 2});
    t.push_back({k + 2, k + 3, k + 4});
    for (int i = k + 4; i <= 2 * k + 2; ++i) t.push_back({k + 3, i, i + 1});
    t.push_back({1, k, 2 * k + 3});
    return t;
  }
  int k = n / 2;
  t.push_back({k - 1, k, k + 1});
  t.push_back({k + 1, k + 2, k + 3});
  for (int i = k + 3; i <= 2 * k + 1; ++i) t.push_back({k + 2, i, i + 1});
  if (k == 2) {
    // (iii) and (v) coincide for k = 2
    t.push_back({1, 2, 6});
    return t;
  }
  t.push_back({1, k - 1, 2 * k + 2});
  for (int i = 1; i <= k - 3; ++i) t.push_back({i, i + 1, k - 1});
  t.push_back({k - 2, k - 1, k});
  return t;
}

FreeWord descending(int from, int to) {  // x_from x_{from-1} ... x_to
  std::vector<int> s;
  for (int i = from; i >= to; --i) s.push_back(i);
  return FreeWord::from_signed(s);
}

}  // namespace

CLArrangement an_arrangement(int n) {
  auto [c1, c2] = an_conic_slots(n);
  const int d = n + 2;
  CLArrangement a;
  a.components.push_back({0, Component::Kind::Conic});
  int next = 1;
  for (int s = 1; s <= d; ++s) {
    if (s == c1 || s == c2) {
      a.slot_map.push_back(0);
    } else {
      a.components.push_back({next, Component::Kind::Line});
      a.slot_map.push_back(next++);
    }
  }
  for (auto &t : an_triples(n)) {
    MultiplePoint mp;
    mp.on_conic = true;
    for (int s : t) {
      if (s == c1 || s == c2)
        mp.conic_slot = s;
      else
        mp.components.push_back(a.slot_map[s - 1]);
    }
    mp.components.push_back(0);
    a.multiple_points.push_back(mp);
  }
  a.validate();
  return a;
}

std::pair<FreeWord, FreeWord> an_second_branch(int n) {
  auto [c1, c2] = an_conic_slots(n);
  if (n % 2) {
    int k = (n - 1) / 2;
    FreeWord pl = descending(k + 1, 1), pr = descending(2 * k + 2, k + 4);
    return {FreeWord::gen(c1).conjugate_by(pl), FreeWord::gen(c2).conjugate_by(pr)};
  }
  int k = n / 2;
  FreeWord pl = descending(k, 1), pr = descending(2 * k + 1, k + 3);
  return {FreeWord::gen(c1).conjugate_by(pl), FreeWord::gen(c2).conjugate_by(pr)};
}

GroupPresentation an_presentation(int n, Fidelity f) {
  if (n < 3) throw std::invalid_argument("A_n needs n >= 3");
  if (f == Fidelity::Full) {
    if (n == 3) return zvk_presentation(builtin_table("A3")).presentation;
    if (n == 4) return zvk_presentation(builtin_table("A4")).presentation;
    throw std::invalid_argument("full presentations exist only for n = 3, 4");
  }
  GroupPresentation p = cf_candidate(an_arrangement(n));
  auto [l, r] = an_second_branch(n);
  p.relations.insert(p.relations.begin() + 1, Relation::equality(l, r));
  return p;
}

bool certify_consequence(const FreeWord &rho, const Relation &r) {
  if (rho.empty()) return true;
  std::set<int> allowed;
  auto note = [&](const FreeWord &w) {
    for (auto [g, e] : w.letters()) allowed.insert(g);
  };
  note(r.lhs);
  note(r.rhs);
  for (auto &t : r.terms) note(t.word());
  for (auto [g, e] : rho.letters())
    if (!allowed.count(g)) return false;
  const int g = std::max(rho.max_generator(), r.max_generator());
  auto single = [](const FreeWord &w) { return w.letters().size() == 1 && w.letters()[0].second == 1; };
  switch (r.kind) {
    case Relation::Kind::Equality: {
      // substitute the lone generator side away; the quotient is free on the rest
      const FreeWord *gen = nullptr, *other = nullptr;
      if (single(r.lhs) && r.rhs.exponent_vector(g)[r.lhs.letters()[0].first - 1] == 0) {
        gen = &r.lhs;
        other = &r.rhs;
      } else if (single(r.rhs) && r.lhs.exponent_vector(g)[r.rhs.letters()[0].first - 1] == 0) {
        gen = &r.rhs;
        other = &r.lhs;
      }
      if (!gen) return false;
      int x = gen->letters()[0].first;
      for (auto [h, e] : other->letters())
        if (h == x) return false;
      std::vector<FreeWord> img(g + 1);
      for (int i = 1; i <= g; ++i) img[i] = FreeWord::gen(i);
      img[x] = *other;
      return rho.substitute(img).empty();
    }
    case Relation::Kind::Commutator: {
      if (!single(r.lhs) || !single(r.rhs) || r.lhs == r.rhs) return false;
      auto ev = rho.exponent_vector(g);
      return ev[r.lhs.letters()[0].first - 1] == 0 && ev[r.rhs.letters()[0].first - 1] == 0;
    }
    case Relation::Kind::Cyclic: {
      if (!r.conjugation_free()) return false;
      const size_t m = r.terms.size();
      std::vector<int> pos(g + 1, -1);
      for (size_t i = 0; i < m; ++i) {
        if (pos[r.terms[i].gen] >= 0) return false;
        pos[r.terms[i].gen] = static_cast<int>(i);
      }
      // onto Z x F_{m-1}: t_i -> a_i (i < m), t_m -> z (t_{m-1} ... t_1)^-1
      std::vector<FreeWord> img(g + 1);
      for (size_t i = 0; i + 1 < m; ++i) img[r.terms[i].gen] = FreeWord::gen(static_cast<int>(i) + 1);
      std::vector<int> tail;
      for (size_t i = m - 1; i >= 1; --i) tail.push_back(static_cast<int>(i));
      img[r.terms[m - 1].gen] = FreeWord::from_signed(tail).inverse();
      for (int i = 1; i <= g; ++i)
        if (pos[i] < 0) img[i] = FreeWord::gen(i);
      int64_t z = rho.exponent_vector(g)[r.terms[m - 1].gen - 1];
      return z == 0 && rho.substitute(img).empty();
    }
  }
  return false;
}

std::string DerivationStep::str() const {
  switch (kind) {
    case Kind::Rewrite:
      return std::string(side ? "rhs" : "lhs") + ": " + from.str() + " -> " + to.str() + "  by " + cited + "   =>  " +
             lhs.str() + " = " + rhs.str();
    case Kind::LeftMultiply:
      return "left-multiply by " + to.str() + "   =>  " + lhs.str() + " = " + rhs.str();
    case Kind::Conjugate:
      return "conjugate by " + to.str() + "   =>  " + lhs.str() + " = " + rhs.str();
  }
  return {};
}

std::string BranchSimplification::summary() const {
  switch (outcome) {
    case Outcome::Commutator:
      return derived.str();
    case Outcome::Equality:
      return derived.str() + " (the first branch relation again)";
    case Outcome::Trivial:
      return "e = e";
  }
  return {};
}

namespace {

std::vector<int> signed_of(const FreeWord &w) { return w.expand(); }

// Position of the first occurrence of `pat` in `w`, or -1.
long find_sub(const std::vector<int> &w, const std::vector<int> &pat) {
  if (pat.empty() || pat.size() > w.size()) return -1;
  auto it = std::search(w.begin(), w.end(), pat.begin(), pat.end());
  return it == w.end() ? -1 : static_cast<long>(it - w.begin());
}

FreeWord splice(const std::vector<int> &w, long at, size_t len, const FreeWord &with) {
  std::vector<int> out(w.begin(), w.begin() + at);
  auto mid = with.expand();
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), w.begin() + at + static_cast<long>(len), w.end());
  return FreeWord::from_signed(out);
}

class Deriver {
 public:
  Deriver(int n, BranchSimplification &out) : n_(n), out_(out), p_(an_presentation(n)) {
    auto [l, r] = an_second_branch(n);
    out_.n = n;
    out_.start_lhs = lhs_ = l;
    out_.start_rhs = rhs_ = r;
  }

  int triple(std::vector<int> s) const {
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < p_.relations.size(); ++i) {
      auto &r = p_.relations[i];
      if (r.kind != Relation::Kind::Cyclic) continue;
      std::vector<int> g;
      for (auto &t : r.terms) g.push_back(t.gen);
      std::sort(g.begin(), g.end());
      if (g == s) return static_cast<int>(i);
    }
    fail("no triple relation on " + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]));
    return -1;
  }

  int node(int a, int b) const {
    for (size_t i = 0; i < p_.relations.size(); ++i) {
      auto &r = p_.relations[i];
      if (r.kind != Relation::Kind::Commutator) continue;
      auto x = r.lhs.letters(), y = r.rhs.letters();
      if (x.size() != 1 || y.size() != 1) continue;
      if ((x[0].first == a && y[0].first == b) || (x[0].first == b && y[0].first == a)) return static_cast<int>(i);
    }
    fail("no node relation between x" + std::to_string(a) + " and x" + std::to_string(b));
    return -1;
  }

  void rewrite(int side, const std::vector<int> &from, const std::vector<int> &to, int rel) {
    FreeWord &w = side ? rhs_ : lhs_;
    auto ex = signed_of(w);
    FreeWord f = FreeWord::from_signed(from), t = FreeWord::from_signed(to);
    long at = find_sub(ex, from);
    if (at < 0) fail("expected " + f.str() + " in " + std::string(side ? "rhs " : "lhs ") + w.str());
    DerivationStep s;
    s.kind = DerivationStep::Kind::Rewrite;
    s.side = side;
    s.from = f;
    s.to = t;
    s.relation = rel;
    s.cited = p_.relations[rel].str();
    s.rho = f * t.inverse();
    if (!certify_consequence(s.rho, p_.relations[rel])) fail(s.rho.str() + " does not follow from " + s.cited);
    w = splice(ex, at, from.size(), t);
    push(s);
  }

  void left_multiply(const FreeWord &u) {
    DerivationStep s;
    s.kind = DerivationStep::Kind::LeftMultiply;
    s.to = u;
    lhs_ = u * lhs_;
    rhs_ = u * rhs_;
    push(s);
  }

  void conjugate(const FreeWord &u) {
    DerivationStep s;
    s.kind = DerivationStep::Kind::Conjugate;
    s.to = u;
    lhs_ = lhs_.conjugate_by(u);
    rhs_ = rhs_.conjugate_by(u);
    push(s);
  }

  // x_m x_{m-1} x_c -> x_c x_m x_{m-1}
  void pass_pair(int side, int m, int c, int rel) { rewrite(side, {m, m - 1, c}, {c, m, m - 1}, rel); }

  const FreeWord &lhs() const { return lhs_; }
  const FreeWord &rhs() const { return rhs_; }

  [[noreturn]] void fail(const std::string &why) const {
    throw std::runtime_error("branch_simplify(" + std::to_string(n_) + "): " + why + "; stuck at " + lhs_.str() + " = " +
                             rhs_.str());
  }

 private:
  int n_;
  BranchSimplification &out_;
  GroupPresentation p_;
  FreeWord lhs_, rhs_;

  void push(DerivationStep s) {
    s.lhs = lhs_;
    s.rhs = rhs_;
    out_.log.push_back(std::move(s));
  }
};

void simplify_odd(Deriver &D, int k, BranchSimplification &b) {
  const int L = 0, R = 1;
  for (int m = k + 5; m <= 2 * k + 2; m += 2) D.pass_pair(R, m, k + 3, D.triple({k + 3, m - 1, m}));
  const int top = k % 2 ? k - 3 : k - 2;
  for (int m = 2; m <= top; m += 2) D.pass_pair(L, m, k, D.triple({m - 1, m, k}));
  if (k % 2) {
    D.rewrite(L, {k, k - 1, k - 2, k}, {k, k, k - 1, k - 2}, D.triple({k - 2, k - 1, k}));
  } else {
    D.rewrite(L, {k + 1, k, k - 1, k}, {k, k + 1, k, k - 1}, D.triple({k - 1, k, k + 1}));
  }
  D.rewrite(R, {k + 3}, {k}, 0);
  b.outcome = BranchSimplification::Outcome::Commutator;
  int partner = k % 2 ? k + 1 : 2 * k + 2;
  b.derived = Relation::commute(FreeWord::gen(k), FreeWord::gen(partner));
}

void simplify_even(Deriver &D, int k, BranchSimplification &b) {
  const int L = 0, R = 1;
  if (k % 2) {
    for (int m = k + 4; m <= 2 * k + 1; m += 2) D.pass_pair(R, m, k + 2, D.triple({k + 2, m - 1, m}));
    for (int m = 2; m <= k - 3; m += 2) D.pass_pair(L, m, k - 1, D.triple({m - 1, m, k - 1}));
    D.rewrite(L, {k, k - 1, k - 2, k - 1}, {k - 1, k, k - 1, k - 2}, D.triple({k - 2, k - 1, k}));
    b.outcome = BranchSimplification::Outcome::Equality;
    b.derived = Relation::equality(FreeWord::gen(k - 1), FreeWord::gen(k + 2));
    return;
  }
  D.left_multiply(FreeWord::gen(k + 1));
  for (int i = 2 * k + 1; i >= k + 4; --i) D.rewrite(R, {k + 1, i}, {i, k + 1}, D.node(k + 1, i));
  D.rewrite(R, {k + 1, k + 3, k + 2}, {k + 2, k + 1, k + 3}, D.triple({k + 1, k + 2, k + 3}));
  for (int i = k + 4; i <= 2 * k + 1; ++i) D.rewrite(R, {k + 1, -i}, {-i, k + 1}, D.node(k + 1, i));
  for (int m = k + 5; m <= 2 * k + 1; m += 2) D.pass_pair(R, m, k + 2, D.triple({k + 2, m - 1, m}));
  D.rewrite(L, {k + 1, k, k - 1}, {k - 1, k + 1, k}, D.triple({k - 1, k, k + 1}));
  D.rewrite(L, {k - 1}, {k + 2}, 0);
  D.left_multiply(FreeWord::from_signed({k + 2, k + 1}).inverse());
  D.conjugate(FreeWord::gen(k, -1));
  for (int m = 2; m <= k - 2; m += 2) D.pass_pair(L, m, k - 1, D.triple({m - 1, m, k - 1}));
  b.outcome = BranchSimplification::Outcome::Trivial;
  b.derived = Relation::equality(FreeWord(), FreeWord());
}

bool matches(const FreeWord &lhs, const FreeWord &rhs, const Relation &derived) {
  FreeWord w = lhs * rhs.inverse();
  auto rs = relators(derived);
  if (w.empty()) return rs.empty() || (rs.size() == 1 && rs[0].empty());
  return rs.size() == 1 && same_relator(w, rs[0]);
}

}  // namespace

BranchSimplification branch_simplify(int n) {
  if (n < 5) throw std::invalid_argument("branch_simplify needs n >= 5 (odd) or n >= 6 (even)");
  BranchSimplification b;
  Deriver D(n, b);
  if (n % 2)
    simplify_odd(D, (n - 1) / 2, b);
  else
    simplify_even(D, n / 2, b);
  if (!matches(D.lhs(), D.rhs(), b.derived)) D.fail("final relation differs from " + b.derived.str());
  return b;
}

std::string replay(const BranchSimplification &b, const GroupPresentation &p) {
  FreeWord lhs = b.start_lhs, rhs = b.start_rhs;
  for (size_t i = 0; i < b.log.size(); ++i) {
    auto &s = b.log[i];
    std::string where = "step " + std::to_string(i + 1) + ": ";
    switch (s.kind) {
      case DerivationStep::Kind::Rewrite: {
        FreeWord &w = s.side ? rhs : lhs;
        auto ex = w.expand();
        long at = find_sub(ex, s.from.expand());
        if (at < 0) return where + s.from.str() + " not found";
        if (s.rho != s.from * s.to.inverse()) return where + "rho does not match the rewrite";
        if (s.relation < 0 || s.relation >= static_cast<long>(p.relations.size())) return where + "cited relation missing";
        if (!certify_consequence(s.rho, p.relations[s.relation])) return where + "rho is not a consequence of the cited relation";
        FreeWord prefix = FreeWord::from_signed(std::vector<int>(ex.begin(), ex.begin() + at));
        FreeWord next = splice(ex, at, s.from.expand().size(), s.to);
        // old = prefix rho prefix^-1 new
        if (w != s.rho.conjugate_by(prefix) * next) return where + "free-group check failed";
        w = next;
        break;
      }
      case DerivationStep::Kind::LeftMultiply:
        lhs = s.to * lhs;
        rhs = s.to * rhs;
        break;
      case DerivationStep::Kind::Conjugate:
        lhs = lhs.conjugate_by(s.to);
        rhs = rhs.conjugate_by(s.to);
        break;
    }
    if (lhs != s.lhs || rhs != s.rhs) return where + "state differs from the log";
  }
  if (!matches(lhs, rhs, b.derived)) return "final relation differs from " + b.derived.str();
  return {};
}

GroupPresentation an_odd_reduced(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("an_odd_reduced needs odd n >= 5");
  GroupPresentation p = an_presentation(n);
  BranchSimplification b = branch_simplify(n);
  p.relations[1] = b.derived;
  // the line commuting with the conic, and its triple with a lower line
  int ell = b.derived.rhs.letters()[0].first;
  auto [c1, c2] = an_conic_slots(n);
  for (size_t i = 0; i < p.relations.size(); ++i) {
    auto &r = p.relations[i];
    if (r.kind != Relation::Kind::Cyclic) continue;
    std::vector<int> g;
    for (auto &t : r.terms) g.push_back(t.gen);
    if (std::find(g.begin(), g.end(), ell) == g.end()) continue;
    int other = 0;
    for (int x : g)
      if (x != ell && x != c1 && x != c2) other = x;
    if (other == 0 || other > ell) continue;
    p.relations.erase(p.relations.begin() + static_cast<long>(i));
    for (int a = 0; a < 3; ++a)
      for (int c = a + 1; c < 3; ++c) p.add(Relation::commute(FreeWord::gen(g[a]), FreeWord::gen(g[c])));
    return p;
  }
  throw std::runtime_error("an_odd_reduced: no triple to dissolve");
}

}  // namespace clarr

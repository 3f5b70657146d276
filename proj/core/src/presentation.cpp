#include "clarr/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace clarr {

Relation Relation::equality(FreeWord l, FreeWord r) {
  Relation x;
  x.kind = Kind::Equality;
  x.lhs = std::move(l);
  x.rhs = std::move(r);
  return x;
}

Relation Relation::commute(FreeWord u, FreeWord v) {
  Relation x;
  x.kind = Kind::Commutator;
  x.lhs = std::move(u);
  x.rhs = std::move(v);
  return x;
}

Relation Relation::cyclic(std::vector<Term> t) {
  Relation x;
  x.kind = Kind::Cyclic;
  x.terms = std::move(t);
  return x;
}

Relation Relation::cyclic_plain(const std::vector<int> &gens) {
  std::vector<Term> t;
  for (int g : gens) t.push_back({g, {}});
  return cyclic(std::move(t));
}

bool Relation::conjugation_free() const {
  for (auto &t : terms)
    if (!t.conj.empty()) return false;
  return true;
}

int Relation::max_generator() const {
  int m = std::max(lhs.max_generator(), rhs.max_generator());
  for (auto &t : terms) m = std::max({m, t.gen, t.conj.max_generator()});
  return m;
}

std::string Relation::str() const {
  switch (kind) {
    case Kind::Equality:
      return lhs.str() + " = " + rhs.str();
    case Kind::Commutator:
      return "[" + lhs.str() + ", " + rhs.str() + "] = e";
    case Kind::Cyclic: {
      std::string s = "[";
      for (size_t i = 0; i < terms.size(); ++i) {
        if (i) s += ", ";
        s += terms[i].word().str();
      }
      return s + "] = e";
    }
  }
  return {};
}

GroupPresentation::GroupPresentation(int g) : generators(g), index_map(g) {
  std::iota(index_map.begin(), index_map.end(), 1);
}

GroupPresentation::GroupPresentation(int g, std::vector<Relation> rels) : GroupPresentation(g) {
  for (auto &r : rels) add(std::move(r));
}

void GroupPresentation::add(Relation r) {
  if (r.max_generator() > generators)
    throw std::out_of_range("relation " + r.str() + " uses a generator beyond x" + std::to_string(generators));
  relations.push_back(std::move(r));
}

void GroupPresentation::validate() const {
  if (static_cast<int>(index_map.size()) != generators) throw std::logic_error("index map size mismatch");
  for (auto &r : relations)
    if (r.max_generator() > generators) throw std::out_of_range("relation out of range: " + r.str());
}

std::string GroupPresentation::str() const {
  std::string s = "<x1..x" + std::to_string(generators) + " |";
  for (size_t i = 0; i < relations.size(); ++i) s += (i ? "; " : " ") + relations[i].str();
  return s + " >";
}

std::vector<Relation> expand_cyclic(const Relation &r) {
  if (r.kind != Relation::Kind::Cyclic) throw std::invalid_argument("expand_cyclic: not a cyclic relation");
  const auto &t = r.terms;
  const size_t n = t.size();
  if (n < 2) throw std::invalid_argument("expand_cyclic: needs at least 2 terms");
  std::vector<Relation> out;
  // [y_k, y_{k-1}..y_1 y_t..y_{k+1}], k = 1..t-1
  for (size_t k = 1; k < n; ++k) {
    FreeWord rest;
    for (size_t i = k - 1; i >= 1; --i) rest *= t[i - 1].word();
    for (size_t i = n; i > k; --i) rest *= t[i - 1].word();
    out.push_back(Relation::commute(t[k - 1].word(), rest));
  }
  return out;
}

std::vector<FreeWord> relators(const Relation &r) {
  switch (r.kind) {
    case Relation::Kind::Equality:
      return {r.lhs * r.rhs.inverse()};
    case Relation::Kind::Commutator:
      return {commutator(r.lhs, r.rhs)};
    case Relation::Kind::Cyclic: {
      std::vector<FreeWord> out;
      for (auto &c : expand_cyclic(r)) out.push_back(commutator(c.lhs, c.rhs));
      return out;
    }
  }
  return {};
}

std::vector<FreeWord> to_relator_form(const GroupPresentation &p) {
  std::vector<FreeWord> out;
  for (auto &r : p.relations)
    for (auto &w : relators(r)) out.push_back(w);
  return out;
}

GroupPresentation from_relators(int g, const std::vector<FreeWord> &rels) {
  GroupPresentation p(g);
  for (auto &w : rels) p.add(Relation::equality(w, {}));
  return p;
}

namespace {

// Substitutes through a relation, keeping its shape when every image is a bare generator.
Relation map_relation(const Relation &r, const std::vector<FreeWord> &img) {
  Relation o = r;
  o.lhs = r.lhs.substitute(img);
  o.rhs = r.rhs.substitute(img);
  if (r.kind == Relation::Kind::Cyclic) {
    for (auto &t : o.terms) {
      const FreeWord &g = img[t.gen];
      if (g.letters().size() != 1 || g.letters()[0].second != 1) {
        // image is not a bare generator: fall back to relators
        return Relation::equality(FreeWord(), FreeWord());
      }
      t.gen = g.letters()[0].first;
      t.conj = t.conj.substitute(img);
    }
  }
  return o;
}

bool trivial_relation(const Relation &r) {
  switch (r.kind) {
    case Relation::Kind::Equality:
      return r.lhs == r.rhs;
    case Relation::Kind::Commutator:
      return commutator(r.lhs, r.rhs).empty();
    case Relation::Kind::Cyclic:
      for (auto &w : relators(r))
        if (!w.empty()) return false;
      return true;
  }
  return false;
}

// All ways to read rel as x_i = w with x_i absent from w.
std::vector<std::pair<int, FreeWord>> solvable(const FreeWord &rel, int max_len) {
  std::vector<std::pair<int, FreeWord>> out;
  const auto &L = rel.letters();
  for (size_t pos = 0; pos < L.size(); ++pos) {
    auto [g, e] = L[pos];
    if (std::llabs(e) != 1) continue;
    bool once = true;
    for (size_t q = 0; q < L.size(); ++q)
      if (q != pos && L[q].first == g) once = false;
    if (!once) continue;
    // rel = a x^e b  =>  x^e = a^-1 b^-1
    std::vector<FreeWord::Letter> a(L.begin(), L.begin() + pos), b(L.begin() + pos + 1, L.end());
    FreeWord w = FreeWord(a).inverse() * FreeWord(b).inverse();
    if (e < 0) w = w.inverse();
    if (w.length() <= max_len) out.emplace_back(g, w);
  }
  return out;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation &p, int max_substitution_length) {
  GroupPresentation cur = p;
  cur.validate();
  for (;;) {
    // drop empty relations
    std::vector<Relation> kept;
    for (auto &r : cur.relations)
      if (!trivial_relation(r)) kept.push_back(r);
    cur.relations = std::move(kept);

    // pick the elimination with the shortest substitute; prefer bare generators
    int best_rel = -1, best_gen = 0;
    FreeWord best_word;
    for (size_t ri = 0; ri < cur.relations.size(); ++ri) {
      auto rs = relators(cur.relations[ri]);
      if (rs.size() != 1) continue;
      for (auto &[gen, w] : solvable(rs[0], max_substitution_length)) {
        if (best_rel < 0 || w.length() < best_word.length() || (w.length() == best_word.length() && gen > best_gen)) {
          best_rel = static_cast<int>(ri);
          best_gen = gen;
          best_word = w;
        }
      }
    }
    if (best_rel < 0) break;

    const int g = cur.generators;
    std::vector<FreeWord> img(g + 1);
    for (int i = 1; i <= g; ++i) {
      int ni = i < best_gen ? i : i - 1;
      img[i] = i == best_gen ? FreeWord() : FreeWord::gen(ni);
    }
    // image of the eliminated generator, renumbered
    std::vector<FreeWord> ren(g + 1);
    for (int i = 1; i <= g; ++i) ren[i] = img[i];
    img[best_gen] = best_word.substitute(ren);

    GroupPresentation next(g - 1);
    next.index_map.clear();
    for (int i = 1; i <= g; ++i)
      if (i != best_gen) next.index_map.push_back(cur.index_map[i - 1]);
    for (size_t ri = 0; ri < cur.relations.size(); ++ri) {
      if (static_cast<int>(ri) == best_rel) continue;
      const Relation &r = cur.relations[ri];
      Relation m = map_relation(r, img);
      if (r.kind == Relation::Kind::Cyclic && m.kind != Relation::Kind::Cyclic) {
        for (auto &w : relators(r)) next.relations.push_back(Relation::equality(w.substitute(img), {}));
        continue;
      }
      next.relations.push_back(m);
    }
    cur = std::move(next);
  }
  return cur;
}

GroupPresentation kill_generator(const GroupPresentation &p, int i) {
  if (i < 1 || i > p.generators) throw std::out_of_range("kill_generator: index out of range");
  const int g = p.generators;
  std::vector<FreeWord> img(g + 1);
  for (int j = 1; j <= g; ++j) img[j] = j == i ? FreeWord() : FreeWord::gen(j < i ? j : j - 1);
  GroupPresentation out(g - 1);
  out.index_map.clear();
  for (int j = 1; j <= g; ++j)
    if (j != i) out.index_map.push_back(p.index_map[j - 1]);
  for (auto &r : p.relations) {
    Relation m = r;
    m.lhs = r.lhs.substitute(img);
    m.rhs = r.rhs.substitute(img);
    if (r.kind == Relation::Kind::Cyclic) {
      m.terms.clear();
      for (auto &t : r.terms)
        if (t.gen != i) m.terms.push_back({img[t.gen].letters()[0].first, t.conj.substitute(img)});
      if (m.terms.size() < 2) continue;
    }
    if (trivial_relation(m)) continue;
    out.relations.push_back(m);
  }
  return out;
}

}  // namespace clarr

#pragma once

#include <string>
#include <vector>

#include "clarr/word.hpp"

namespace clarr {

// x_gen conjugated by conj: conj x_gen conj^-1.
struct Term {
  int gen = 0;
  FreeWord conj;
  FreeWord word() const { return FreeWord::gen(gen).conjugate_by(conj); }
  bool operator==(const Term &o) const { return gen == o.gen && conj == o.conj; }
};

struct Relation {
  enum class Kind { Equality, Cyclic, Commutator };
  Kind kind = Kind::Equality;
  FreeWord lhs, rhs;        // Equality: lhs = rhs. Commutator: [lhs, rhs] = e.
  std::vector<Term> terms;  // Cyclic, in bracket order.

  static Relation equality(FreeWord l, FreeWord r);
  static Relation commute(FreeWord u, FreeWord v);
  static Relation cyclic(std::vector<Term> t);
  // Bare generators, no conjugators.
  static Relation cyclic_plain(const std::vector<int> &gens);

  bool conjugation_free() const;
  int max_generator() const;
  std::string str() const;
  bool operator==(const Relation &o) const { return kind == o.kind && lhs == o.lhs && rhs == o.rhs && terms == o.terms; }
};

struct GroupPresentation {
  int generators = 0;
  std::vector<Relation> relations;
  // index_map[i-1] = label of current generator i in the presentation it came from.
  std::vector<int> index_map;

  GroupPresentation() = default;
  explicit GroupPresentation(int g);
  GroupPresentation(int g, std::vector<Relation> rels);
  void add(Relation r);
  void validate() const;
  std::string str() const;
};

// The t-1 commutators of a cyclic relation.
std::vector<Relation> expand_cyclic(const Relation &r);
std::vector<FreeWord> relators(const Relation &r);
std::vector<FreeWord> to_relator_form(const GroupPresentation &p);
GroupPresentation tietze_simplify(const GroupPresentation &p, int max_substitution_length = 8);
GroupPresentation kill_generator(const GroupPresentation &p, int i);
// Presentation whose relations are the given relators (as w = e).
GroupPresentation from_relators(int g, const std::vector<FreeWord> &rels);

}  // namespace clarr

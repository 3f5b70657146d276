#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clarr/finquot.hpp"
#include "clarr/presentation.hpp"

namespace clarr::verify {

struct Check {
  std::string name, expected, computed;
  bool pass = false;
};

struct Criterion {
  int number = 0;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<Check> checks;
  bool pass() const;
};

// Relation lists as printed for the three- and four-line arrangements.
GroupPresentation printed_m3();
GroupPresentation printed_m3cf();  // generators x1,x2,x3,x5 renumbered 1..4, index_map keeps the labels
GroupPresentation printed_m4();
GroupPresentation printed_m4cf();
// <a,b,c,u,v | every pair commutes except (u,v)>
GroupPresentation z3_plus_f2();
GroupPresentation free_abelian(int r);

// pi[i-1] = generator of `computed` standing for x_i of `printed`, such that for every target every
// homomorphism of `computed` kills the relabelled printed relators and the hom counts agree.
std::optional<std::vector<int>> find_relabeling(const GroupPresentation &computed, const GroupPresentation &printed,
                                                const std::vector<FiniteGroupTable> &targets);

Criterion criterion(int number);
// "" (criteria 2..8), odd, even, small, quotients, structure
std::vector<int> scope_numbers(const std::string &only);
std::vector<Criterion> run(const std::vector<int> &numbers);

std::string render_text(const std::vector<Criterion> &cs, bool details);

}  // namespace clarr::verify

#pragma once

#include <map>
#include <string>
#include <vector>

#include "clarr/presentation.hpp"

namespace clarr {

struct Component {
  enum class Kind { Line, Conic };
  int id = 0;
  Kind kind = Kind::Line;
};

struct MultiplePoint {
  std::vector<int> components;  // ids
  bool on_conic = false;
  int conic_slot = 0;  // which of the conic's two slots the local relation uses
};

struct CLArrangement {
  std::vector<Component> components;
  std::vector<MultiplePoint> multiple_points;
  std::vector<int> slot_map;  // slot_map[s-1] = component id at fiber slot s
  // Multiple points (indices) in their order along each line; lines missing here use listing order.
  std::map<int, std::vector<int>> line_point_orders;

  int degree() const { return static_cast<int>(slot_map.size()); }
  const Component &component(int id) const;
  const Component *conic() const;
  std::vector<int> slots_of(int id) const;
  std::vector<int> points_on(int id) const;  // ordered
  void validate() const;
};

struct ArrGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

ArrGraph graph_of(const CLArrangement &arr);
int beta(const CLArrangement &arr);
int v_of(const CLArrangement &arr);
CLArrangement line_arrangement(int lines, const std::vector<std::vector<int>> &points);

GroupPresentation cf_candidate(const CLArrangement &arr);

CLArrangement an_arrangement(int n);
// conic slots of A_n: {k, k+3} for n = 2k+1, {k-1, k+2} for n = 2k
std::pair<int, int> an_conic_slots(int n);

enum class Fidelity { Full, Class2Faithful };
GroupPresentation an_presentation(int n, Fidelity f = Fidelity::Class2Faithful);
// The two sides of the second branch relation.
std::pair<FreeWord, FreeWord> an_second_branch(int n);

struct DerivationStep {
  enum class Kind { Rewrite, LeftMultiply, Conjugate };
  Kind kind = Kind::Rewrite;
  int side = 0;           // Rewrite: 0 = left, 1 = right
  FreeWord from, to;      // Rewrite: subword replaced; LeftMultiply/Conjugate: `to` is the multiplier
  int relation = -1;      // index into an_presentation(n)
  std::string cited;      // the relation as text
  FreeWord rho;           // from * to^-1, a consequence of the cited relation
  FreeWord lhs, rhs;      // state after the step
  std::string str() const;
};

struct BranchSimplification {
  int n = 0;
  FreeWord start_lhs, start_rhs;
  std::vector<DerivationStep> log;
  enum class Outcome { Commutator, Equality, Trivial } outcome = Outcome::Trivial;
  Relation derived;
  std::string summary() const;
};

// Throws std::runtime_error with the stuck word when a scripted move does not apply.
BranchSimplification branch_simplify(int n);
// Rechecks every logged step against the presentation; empty string when the log replays.
std::string replay(const BranchSimplification &b, const GroupPresentation &p);
// rho is a consequence of relation r using only r's letters.
bool certify_consequence(const FreeWord &rho, const Relation &r);

// Odd n: second branch relation replaced by the derived commutator and the cycle's
// dissolved triple split into three commutators.
GroupPresentation an_odd_reduced(int n);

}  // namespace clarr

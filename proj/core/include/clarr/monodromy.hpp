#pragma once

#include <string>
#include <vector>

#include "clarr/braid.hpp"
#include "clarr/presentation.hpp"

namespace clarr {

struct Motion {
  enum class Kind { Auto, None, Block, Quarter };
  Kind kind = Kind::Auto;
  int a = 0, b = 0;  // Block
  int slot = 0;      // Quarter: pair sits after real point `slot`
  static Motion none() { return {Kind::None}; }
  static Motion block(int a, int b) { return {Kind::Block, a, b, 0}; }
  static Motion quarter(int k) { return {Kind::Quarter, 0, 0, k}; }
};

struct SingularEvent {
  enum class Kind { Branch, Node, Multiple };
  Kind kind = Kind::Node;
  int multiplicity = 2;  // Branch: 2 slots of the conic; Node: 2
  int a = 0, b = 0;      // Lefschetz pair
  Motion delta;          // Auto unless overridden

  static SingularEvent branch(int a, int b, Motion d = {}) { return {Kind::Branch, 2, a, b, d}; }
  static SingularEvent node(int a, int b, Motion d = {}) { return {Kind::Node, 2, a, b, d}; }
  static SingularEvent multiple(int m, int a, int b, Motion d = {}) { return {Kind::Multiple, m, a, b, d}; }
  int degree() const;  // exponent sum of the local twist
};

struct EventTable {
  int fiber_size = 0;
  std::vector<SingularEvent> events;
  void validate() const;
};

Motion default_delta(const SingularEvent &e);

// Per-event local data after resolving quarter-twist markers: the local twist T_j and the
// contribution of event j to the conjugators of later events, both in fiber slots.
struct ResolvedEvent {
  Braid twist;
  Braid delta;
  int slot_a = 0, slot_b = 0;  // Lefschetz pair in fiber slots
  bool weaves = false;         // skeleton passes between a complex conic pair
};
std::vector<ResolvedEvent> resolve_events(const EventTable &t);

Braid conjugator(const EventTable &t, int j);  // j is 1-based
Braid monodromy_braid(const EventTable &t, int j);

struct ZvkResult {
  GroupPresentation presentation;
  std::vector<int> event_of_relation;  // 1-based event index per relation
  bool partial = false;                // degree identity violated
};
ZvkResult zvk_presentation(const EventTable &t);

int degree_sum(const EventTable &t);
bool degree_identity(const EventTable &t);
// beta_N ... beta_1 against Delta_d^2
bool product_identity(const EventTable &t);

EventTable builtin_table(const std::string &name);

}  // namespace clarr

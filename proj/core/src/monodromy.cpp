#include "clarr/monodromy.hpp"

#include <stdexcept>

namespace clarr {

int SingularEvent::degree() const {
  switch (kind) {
    case Kind::Branch:
      return 1;
    case Kind::Node:
      return 2;
    case Kind::Multiple:
      return multiplicity * (multiplicity - 1);
  }
  return 0;
}

void EventTable::validate() const {
  if (fiber_size < 2) throw std::invalid_argument("fiber_size must be >= 2");
  for (size_t j = 0; j < events.size(); ++j) {
    const auto &e = events[j];
    std::string at = "event " + std::to_string(j + 1) + ": ";
    if (e.a < 1 || e.b > fiber_size || e.a >= e.b) throw std::invalid_argument(at + "bad Lefschetz pair");
    if (e.kind == SingularEvent::Kind::Multiple) {
      if (e.multiplicity < 3) throw std::invalid_argument(at + "multiplicity must be >= 3");
      if (e.b - e.a != e.multiplicity - 1) throw std::invalid_argument(at + "pair width must be multiplicity - 1");
    }
    if (e.delta.kind == Motion::Kind::Quarter && e.kind != SingularEvent::Kind::Branch)
      throw std::invalid_argument(at + "quarter twist only on a branch event");
    if (e.delta.kind == Motion::Kind::Block && (e.delta.a < 1 || e.delta.b > fiber_size || e.delta.a >= e.delta.b))
      throw std::invalid_argument(at + "bad delta block");
  }
}

Motion default_delta(const SingularEvent &e) {
  if (e.delta.kind != Motion::Kind::Auto) return e.delta;
  if (e.kind == SingularEvent::Kind::Branch) return Motion::quarter(e.a - 1);
  return Motion::block(e.a, e.b);
}

std::vector<ResolvedEvent> resolve_events(const EventTable &t) {
  t.validate();
  const int d = t.fiber_size;
  std::vector<ResolvedEvent> out;
  int marker = 0;  // real points before the complex pair, 0 when the pair is real
  auto block = [&](int a, int b) { return half_twist_block(a, b, d); };
  for (size_t j = 0; j < t.events.size(); ++j) {
    const auto &e = t.events[j];
    Motion mv = default_delta(e);
    ResolvedEvent r;
    if (e.kind == SingularEvent::Kind::Branch) {
      r.slot_a = e.a;
      r.slot_b = e.b;
      r.twist = block(e.a, e.b);
      r.delta = Braid(d, {});
      if (mv.kind == Motion::Kind::Quarter) {
        if (marker == 0) {
          marker = mv.slot;
          if (marker < 0 || marker + 2 > d) throw std::invalid_argument("quarter twist slot out of range");
        } else if (marker == mv.slot) {
          r.delta = Braid(d, {marker + 1});
          marker = 0;
        } else {
          throw std::invalid_argument("event " + std::to_string(j + 1) + ": quarter twists at different slots do not compose");
        }
      } else if (mv.kind == Motion::Kind::Block) {
        r.delta = block(mv.a, mv.b);
      }
      out.push_back(r);
      continue;
    }
    if (marker == 0) {
      r.slot_a = e.a;
      r.slot_b = e.b;
      r.twist = block(e.a, e.b).pow(2);
      r.delta = mv.kind == Motion::Kind::Block ? block(mv.a, mv.b) : Braid(d, {});
      out.push_back(r);
      continue;
    }
    // real-point numbering past a complex pair sitting after real point `marker`
    auto slot = [&](int x) { return x <= marker ? x : x + 2; };
    if (e.b <= marker || e.a > marker) {
      r.slot_a = slot(e.a);
      r.slot_b = slot(e.b);
      r.twist = block(r.slot_a, r.slot_b).pow(2);
      r.delta = mv.kind == Motion::Kind::Block ? block(slot(mv.a), slot(mv.b)) : Braid(d, {});
    } else if (e.kind == SingularEvent::Kind::Node && e.a == marker && e.b == marker + 1) {
      const int k = marker;
      Braid w(d, {-(k + 2), k + 1});
      r.slot_a = k;
      r.slot_b = k + 3;
      r.weaves = true;
      r.twist = w * Braid(d, {k, k}) * w.inverse();
      r.delta = mv.kind == Motion::Kind::Block ? w * Braid(d, {k}) * w.inverse() : Braid(d, {});
    } else {
      throw std::invalid_argument("event " + std::to_string(j + 1) + ": multiple point straddling a complex conic pair is unsupported");
    }
    out.push_back(r);
  }
  return out;
}

static Braid conjugator_from(const std::vector<ResolvedEvent> &rs, int d, int j) {
  Braid c(d, {});
  for (int i = 0; i < j - 1; ++i) c = c * rs[i].delta;
  return c;
}

Braid conjugator(const EventTable &t, int j) {
  if (j < 1 || j > static_cast<int>(t.events.size())) throw std::out_of_range("event index");
  return conjugator_from(resolve_events(t), t.fiber_size, j);
}

Braid monodromy_braid(const EventTable &t, int j) {
  if (j < 1 || j > static_cast<int>(t.events.size())) throw std::out_of_range("event index");
  auto rs = resolve_events(t);
  Braid c = conjugator_from(rs, t.fiber_size, j);
  return c * rs[j - 1].twist * c.inverse();
}

int degree_sum(const EventTable &t) {
  int s = 0;
  for (auto &e : t.events) s += e.degree();
  return s;
}

bool degree_identity(const EventTable &t) { return degree_sum(t) == t.fiber_size * (t.fiber_size - 1); }

ZvkResult zvk_presentation(const EventTable &t) {
  auto rs = resolve_events(t);
  const int d = t.fiber_size;
  ZvkResult out;
  out.presentation = GroupPresentation(d);
  out.partial = !degree_identity(t);
  for (size_t j = 1; j <= rs.size(); ++j) {
    Braid c = conjugator_from(rs, d, static_cast<int>(j));
    Braid beta = c * rs[j - 1].twist * c.inverse();
    auto img = artin_images(beta);
    for (int i = 1; i <= d; ++i) {
      FreeWord x = FreeWord::gen(i);
      if (img[i] == x) continue;
      out.presentation.add(Relation::equality(x, img[i]));
      out.event_of_relation.push_back(static_cast<int>(j));
    }
  }
  return out;
}

bool product_identity(const EventTable &t) {
  auto rs = resolve_events(t);
  const int d = t.fiber_size;
  Braid prod(d, {});
  for (size_t j = 1; j <= rs.size(); ++j) {
    Braid c = conjugator_from(rs, d, static_cast<int>(j));
    prod = c * rs[j - 1].twist * c.inverse() * prod;
  }
  return braid_equal(prod, garside(d).pow(2));
}

EventTable builtin_table(const std::string &name) {
  using E = SingularEvent;
  if (name == "A3")
    return {5,
            {E::branch(3, 4, Motion::none()), E::multiple(3, 1, 3), E::multiple(3, 3, 5), E::multiple(3, 1, 3),
             E::branch(3, 4, Motion::none())}};
  if (name == "A4")
    return {6,
            {E::branch(3, 4, Motion::none()), E::multiple(3, 1, 3), E::multiple(3, 3, 5), E::node(5, 6), E::multiple(3, 3, 5),
             E::multiple(3, 1, 3), E::branch(3, 4, Motion::quarter(2)), E::node(2, 3, Motion::none())}};
  throw std::invalid_argument("unknown builtin table '" + name + "'");
}

}  // namespace clarr

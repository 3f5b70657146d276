#include "clarr/io.hpp"

#include <cctype>
#include <fstream>

namespace clarr::io {

namespace {

[[noreturn]] void bad(const std::string &what) { throw InputError(what); }

int letter_index(const std::string &s, bool &inverse) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'X')) bad("bad letter \"" + s + "\"");
  inverse = s[0] == 'X';
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad("bad letter \"" + s + "\"");
  int g = std::stoi(s.substr(1));
  if (g < 1) bad("generator index must be positive in \"" + s + "\"");
  return g;
}

template <class T>
T get(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json word_to_json(const FreeWord &w) {
  json a = json::array();
  for (int s : w.expand()) a.push_back((s > 0 ? "x" : "X") + std::to_string(s > 0 ? s : -s));
  return a;
}

FreeWord word_from_json(const json &j) {
  if (!j.is_array()) bad("a word must be an array of letters");
  std::vector<int> s;
  for (auto &x : j) {
    if (!x.is_string()) bad("letters must be strings");
    bool inv = false;
    int g = letter_index(x.get<std::string>(), inv);
    s.push_back(inv ? -g : g);
  }
  return FreeWord::from_signed(s);
}

json relation_to_json(const Relation &r) {
  switch (r.kind) {
    case Relation::Kind::Equality:
      return {{"type", "equality"}, {"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}};
    case Relation::Kind::Commutator:
      return {{"type", "commutator"}, {"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}};
    case Relation::Kind::Cyclic: {
      json terms = json::array();
      for (auto &t : r.terms) {
        if (t.conj.empty())
          terms.push_back("x" + std::to_string(t.gen));
        else
          terms.push_back({{"gen", "x" + std::to_string(t.gen)}, {"conj", word_to_json(t.conj)}});
      }
      return {{"type", "cyclic"}, {"terms", terms}};
    }
  }
  return {};
}

Relation relation_from_json(const json &j) {
  auto type = get<std::string>(j, "type");
  if (type == "equality") return Relation::equality(word_from_json(j.at("lhs")), word_from_json(j.at("rhs")));
  if (type == "commutator") {
    if (!j.contains("lhs") || !j.contains("rhs")) bad("commutator needs lhs and rhs");
    return Relation::commute(word_from_json(j.at("lhs")), word_from_json(j.at("rhs")));
  }
  if (type == "cyclic") {
    std::vector<Term> terms;
    for (auto &t : get<json>(j, "terms")) {
      bool inv = false;
      if (t.is_string()) {
        int g = letter_index(t.get<std::string>(), inv);
        if (inv) bad("cyclic terms are positive generators");
        terms.push_back({g, {}});
      } else {
        int g = letter_index(get<std::string>(t, "gen"), inv);
        if (inv) bad("cyclic terms are positive generators");
        terms.push_back({g, t.contains("conj") ? word_from_json(t.at("conj")) : FreeWord()});
      }
    }
    if (terms.size() < 2) bad("a cyclic relation needs at least two terms");
    return Relation::cyclic(std::move(terms));
  }
  bad("unknown relation type \"" + type + "\"");
}

json presentation_to_json(const GroupPresentation &p) {
  json rels = json::array();
  for (auto &r : p.relations) rels.push_back(relation_to_json(r));
  return {{"generators", p.generators}, {"relations", rels}, {"index_map", p.index_map}};
}

GroupPresentation presentation_from_json(const json &j) {
  int g = get<int>(j, "generators");
  if (g < 0) bad("negative generator count");
  GroupPresentation p(g);
  for (auto &r : get<json>(j, "relations")) {
    try {
      p.add(relation_from_json(r));
    } catch (const std::out_of_range &e) {
      bad(e.what());
    }
  }
  if (j.contains("index_map")) {
    p.index_map = j.at("index_map").get<std::vector<int>>();
    if (static_cast<int>(p.index_map.size()) != g) bad("index_map length differs from generator count");
  }
  return p;
}

namespace {

json motion_to_json(const Motion &m) {
  switch (m.kind) {
    case Motion::Kind::Auto:
      return "auto";
    case Motion::Kind::None:
      return "none";
    case Motion::Kind::Block:
      return {{"block", {m.a, m.b}}};
    case Motion::Kind::Quarter:
      return {{"quarter", m.slot}};
  }
  return "auto";
}

Motion motion_from_json(const json &j) {
  if (j.is_string()) {
    if (j == "auto") return {};
    if (j == "none") return Motion::none();
    bad("delta must be \"auto\", \"none\", {\"block\":[a,b]} or {\"quarter\":k}");
  }
  if (j.contains("block")) {
    auto b = j.at("block").get<std::vector<int>>();
    if (b.size() != 2) bad("block needs two endpoints");
    return Motion::block(b[0], b[1]);
  }
  if (j.contains("quarter")) return Motion::quarter(j.at("quarter").get<int>());
  bad("unrecognised delta");
}

}  // namespace

json event_table_to_json(const EventTable &t) {
  json ev = json::array();
  for (auto &e : t.events) {
    json x;
    x["kind"] = e.kind == SingularEvent::Kind::Branch ? "branch" : e.kind == SingularEvent::Kind::Node ? "node" : "multiple";
    if (e.kind == SingularEvent::Kind::Multiple) x["multiplicity"] = e.multiplicity;
    x["lefschetz"] = {e.a, e.b};
    x["delta"] = motion_to_json(e.delta);
    ev.push_back(x);
  }
  return {{"fiber_size", t.fiber_size}, {"events", ev}};
}

EventTable event_table_from_json(const json &j) {
  EventTable t;
  t.fiber_size = get<int>(j, "fiber_size");
  for (auto &x : get<json>(j, "events")) {
    auto kind = get<std::string>(x, "kind");
    auto l = get<std::vector<int>>(x, "lefschetz");
    if (l.size() != 2) bad("lefschetz needs two slots");
    Motion d = x.contains("delta") ? motion_from_json(x.at("delta")) : Motion{};
    if (kind == "branch")
      t.events.push_back(SingularEvent::branch(l[0], l[1], d));
    else if (kind == "node")
      t.events.push_back(SingularEvent::node(l[0], l[1], d));
    else if (kind == "multiple")
      t.events.push_back(SingularEvent::multiple(get<int>(x, "multiplicity"), l[0], l[1], d));
    else
      bad("unknown event kind \"" + kind + "\"");
  }
  try {
    t.validate();
  } catch (const std::exception &e) {
    bad(e.what());
  }
  return t;
}

json arrangement_to_json(const CLArrangement &a) {
  json comps = json::array(), pts = json::array(), orders = json::object();
  for (auto &c : a.components) comps.push_back({{"id", c.id}, {"kind", c.kind == Component::Kind::Conic ? "conic" : "line"}});
  for (auto &p : a.multiple_points) {
    json x = {{"components", p.components}, {"on_conic", p.on_conic}};
    if (p.on_conic) x["conic_slot"] = p.conic_slot;
    pts.push_back(x);
  }
  for (auto &[id, o] : a.line_point_orders) orders[std::to_string(id)] = o;
  json out = {{"components", comps}, {"multiple_points", pts}, {"slots", a.slot_map}};
  if (!a.line_point_orders.empty()) out["line_point_orders"] = orders;
  if (const Component *q = a.conic()) {
    auto s = a.slots_of(q->id);
    out["conic_slots"] = s;
  }
  return out;
}

CLArrangement arrangement_from_json(const json &j) {
  CLArrangement a;
  for (auto &c : get<json>(j, "components")) {
    auto kind = get<std::string>(c, "kind");
    if (kind != "line" && kind != "conic") bad("component kind must be line or conic");
    a.components.push_back({get<int>(c, "id"), kind == "conic" ? Component::Kind::Conic : Component::Kind::Line});
  }
  if (j.contains("slots")) {
    a.slot_map = j.at("slots").get<std::vector<int>>();
  } else {
    for (auto &c : a.components) {
      a.slot_map.push_back(c.id);
      if (c.kind == Component::Kind::Conic) a.slot_map.push_back(c.id);
    }
  }
  for (auto &p : get<json>(j, "multiple_points")) {
    MultiplePoint mp;
    mp.components = get<std::vector<int>>(p, "components");
    mp.on_conic = p.value("on_conic", false);
    mp.conic_slot = p.value("conic_slot", 0);
    a.multiple_points.push_back(mp);
  }
  if (j.contains("line_point_orders"))
    for (auto &[k, v] : j.at("line_point_orders").items()) a.line_point_orders[std::stoi(k)] = v.get<std::vector<int>>();
  if (const Component *q = a.conic()) {
    // default conic slot: the first one
    auto s = a.slots_of(q->id);
    for (auto &mp : a.multiple_points)
      if (mp.on_conic && mp.conic_slot == 0 && !s.empty()) mp.conic_slot = s[0];
  }
  try {
    a.validate();
  } catch (const std::exception &e) {
    bad(e.what());
  }
  return a;
}

json group_to_json(const FiniteGroupTable &g) {
  std::vector<std::string> labels;
  for (int a = 0; a < g.order(); ++a) labels.push_back(g.label(a));
  return {{"name", g.name()}, {"table", g.table()}, {"labels", labels}};
}

FiniteGroupTable group_from_json(const json &j) {
  try {
    return FiniteGroupTable(j.value("name", std::string("H")), get<std::vector<std::vector<int>>>(j, "table"),
                            j.value("labels", std::vector<std::string>{}));
  } catch (const std::invalid_argument &e) {
    bad(e.what());
  }
}

json fingerprint_to_json(const Fingerprint &f) {
  json a = json::array();
  for (auto &e : f) a.push_back({{"target", e.target}, {"all", e.all}, {"epi", e.epi}});
  return a;
}

json load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace clarr::io

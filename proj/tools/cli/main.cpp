#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>

#include "clarr/arrangement.hpp"
#include "clarr/braid.hpp"
#include "clarr/finquot.hpp"
#include "clarr/io.hpp"
#include "clarr/monodromy.hpp"
#include "clarr/nilpotent.hpp"
#include "clarr/verify.hpp"

using namespace clarr;
using json = io::json;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, InputFailed = 2 };

std::string digest(const std::string &s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct Report {
  std::string command;
  json inputs;
  json results = json::array();
  std::vector<std::string> text;
  bool ok = true;

  void claim(const std::string &name, const std::string &expected, const std::string &computed, bool pass) {
    results.push_back({{"claim", name}, {"expected", expected}, {"computed", computed}, {"pass", pass}});
    text.push_back(std::string(pass ? "  ok    " : "  FAIL  ") + name + ": " + computed + (pass ? "" : " (expected " + expected + ")"));
    ok = ok && pass;
  }
  void info(const std::string &name, const json &value, const std::string &shown) {
    results.push_back({{"claim", name}, {"value", value}});
    text.push_back("  " + name + ": " + shown);
  }
  int emit(bool as_json, double seconds) const {
    if (as_json) {
      json j = {{"command", command}, {"inputs_digest", digest(inputs.dump())}, {"results", results}, {"wall_time_s", seconds}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << command << "\n";
      for (auto &l : text) std::cout << l << "\n";
      std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
    }
    return ok ? Ok : CheckFailed;
  }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_an(int n, const std::string &fidelity, const std::string &emit, bool s3, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  Fidelity f;
  if (fidelity == "class2")
    f = Fidelity::Class2Faithful;
  else if (fidelity == "full")
    f = Fidelity::Full;
  else
    throw std::invalid_argument("fidelity must be class2 or full");
  Report r;
  r.command = "an --n " + std::to_string(n) + " --fidelity " + fidelity + " " + emit;
  r.inputs = {{"n", n}, {"fidelity", fidelity}};
  auto p = an_presentation(n, f);
  if (emit == "presentation" || emit == "all") {
    r.info("presentation", io::presentation_to_json(p), p.str());
    if (f == Fidelity::Class2Faithful) {
      auto arr = an_arrangement(n);
      r.info("arrangement", io::arrangement_to_json(arr),
             "beta " + std::to_string(beta(arr)) + ", v " + std::to_string(v_of(arr)) + ", conic slots " +
                 std::to_string(an_conic_slots(n).first) + " and " + std::to_string(an_conic_slots(n).second));
    }
  }
  if (emit == "invariants" || emit == "all") {
    auto q = class2_quotient(p);
    r.info("abelianization", q.abelian.str(), q.abelian.str());
    r.info("G2/G3", q.g2g3.str(), q.g2g3.str());
    int cr = center_rank_class2(q);
    r.info("center rank mod G3", cr, std::to_string(cr));
    if (f == Fidelity::Class2Faithful && (n >= 5)) {
      try {
        auto b = branch_simplify(n);
        std::string why = replay(b, p);
        r.info("branch relation", b.derived.str(), b.summary());
        json log = json::array();
        for (auto &s : b.log) log.push_back(s.str());
        r.info("derivation", log, std::to_string(b.log.size()) + " steps");
        r.claim("derivation replays", "ok", why.empty() ? "ok" : why, why.empty());
      } catch (const std::runtime_error &e) {
        r.claim("branch_simplify", "derivation", e.what(), false);
      }
    }
    if (n % 2 == 0) {
      auto v = direct_sum_obstruction(q, n);
      r.info("direct sum verdict", v.not_direct_sum ? "NotDirectSum" : "Inconclusive",
             std::string(v.not_direct_sum ? "NotDirectSum" : "Inconclusive") + " (" + v.reason + ")");
    }
    if (s3 || f == Fidelity::Full) {
      auto S3 = builtin_group("S3");
      uint64_t all = hom_count(p, S3, HomMode::All), epi = hom_count(p, S3, HomMode::Epi);
      uint64_t cls = epi / automorphism_count(S3);
      r.info("S3 homomorphisms", json{{"all", all}, {"epi", epi}, {"epi_classes", cls}},
             std::to_string(all) + " homs, " + std::to_string(epi) + " epis, " + std::to_string(cls) + " up to Aut(S3)");
    }
  }
  return r.emit(as_json, since(t0));
}

int cmd_monodromy(const std::string &builtin, const std::string &events, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  if (builtin.empty() == events.empty()) throw std::invalid_argument("give exactly one of --builtin or --events");
  Report r;
  EventTable t;
  if (!builtin.empty()) {
    t = builtin_table(builtin);
    r.command = "monodromy --builtin " + builtin;
  } else {
    t = io::event_table_from_json(io::load_file(events));
    r.command = "monodromy --events " + events;
  }
  r.inputs = io::event_table_to_json(t);
  bool deg = degree_identity(t);
  r.claim("degree identity", std::to_string(t.fiber_size * (t.fiber_size - 1)), std::to_string(degree_sum(t)), deg);
  if (!deg) r.text.push_back("  warning: partial factorization, the presentation below may be incomplete");
  auto z = zvk_presentation(t);
  r.info("presentation", io::presentation_to_json(z.presentation), z.presentation.str());
  if (deg) {
    bool prod = product_identity(t);
    r.claim("product of local braids = Delta^2", "equal", prod ? "equal" : "differ", prod);
  }
  return r.emit(as_json, since(t0));
}

int cmd_verify(const std::string &scope, int max_n, const std::string &only, bool details, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<int> numbers;
  if (scope == "lemma-delta") {
    Report r;
    r.command = "verify lemma-delta --max-n " + std::to_string(max_n);
    r.inputs = {{"max_n", max_n}};
    if (max_n < 2) throw std::invalid_argument("--max-n must be at least 2");
    for (auto &row : verify_lemma_delta(max_n))
      r.claim("n=" + std::to_string(row.n), "equal", row.equal ? "equal" : "differ", row.equal);
    return r.emit(as_json, since(t0));
  }
  if (scope == "paper")
    numbers = verify::scope_numbers(only);
  else if (scope == "all")
    numbers = {1, 2, 3, 4, 5, 6, 7, 8};
  else
    throw std::invalid_argument("scope must be lemma-delta, paper or all");
  auto cs = verify::run(numbers);
  bool ok = true;
  for (auto &c : cs) ok = ok && c.pass();
  if (as_json) {
    json res = json::array();
    for (auto &c : cs) {
      json checks = json::array();
      for (auto &k : c.checks) checks.push_back({{"claim", k.name}, {"expected", k.expected}, {"computed", k.computed}, {"pass", k.pass}});
      res.push_back({{"criterion", c.number}, {"title", c.title}, {"pass", c.pass()}, {"seconds", c.seconds}, {"checks", checks}});
    }
    json j = {{"command", "verify " + scope + (only.empty() ? "" : " --only " + only)},
              {"inputs_digest", digest(scope + only)},
              {"results", res},
              {"wall_time_s", since(t0)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << verify::render_text(cs, details);
  }
  return ok ? Ok : CheckFailed;
}

int cmd_fingerprint(const std::string &file, const std::vector<std::string> &targets, const std::vector<std::string> &group_files,
                    bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "fingerprint " + file;
  auto j = io::load_file(file);
  r.inputs = j;
  auto p = io::presentation_from_json(j);
  std::vector<FiniteGroupTable> hs;
  for (auto &t : targets) hs.push_back(builtin_group(t));
  for (auto &g : group_files) hs.push_back(io::group_from_json(io::load_file(g)));
  auto f = fingerprint(p, hs);
  r.info("fingerprint", io::fingerprint_to_json(f), fingerprint_str(f));
  return r.emit(as_json, since(t0));
}

int cmd_arrangement(const std::string &file, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "arrangement " + file;
  auto j = io::load_file(file);
  r.inputs = j;
  auto arr = io::arrangement_from_json(j);
  auto g = graph_of(arr);
  r.info("graph", json{{"vertices", g.vertices}, {"edges", g.edges}},
         std::to_string(g.vertices) + " vertices, " + std::to_string(g.edges.size()) + " edges");
  r.info("beta", beta(arr), std::to_string(beta(arr)));
  r.info("v", v_of(arr), std::to_string(v_of(arr)));
  auto p = cf_candidate(arr);
  r.info("conjugation-free candidate", io::presentation_to_json(p), p.str());
  auto q = class2_quotient(p);
  r.info("G2/G3 of the candidate", q.g2g3.str(), q.g2g3.str());
  return r.emit(as_json, since(t0));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"clarr: fundamental groups of real conic-line arrangements"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON report");

  auto *an = app.add_subcommand("an", "presentation and invariants of the cycle family A_n");
  int n = 0;
  std::string fidelity = "class2", emit = "all";
  bool s3 = false;
  an->add_option("--n", n, "number of lines")->required();
  an->add_option("--fidelity", fidelity, "class2 | full")->check(CLI::IsMember({"class2", "full"}));
  an->add_option("emit", emit, "presentation | invariants | all")->check(CLI::IsMember({"presentation", "invariants", "all"}));
  an->add_flag("--s3", s3, "also count homomorphisms to S3");
  an->add_flag("--json", as_json, "JSON report");

  auto *mono = app.add_subcommand("monodromy", "Zariski-van Kampen presentation from a singular-event table");
  std::string builtin, events;
  mono->add_option("--builtin", builtin, "A3 | A4");
  mono->add_option("--events", events, "event table JSON file");
  mono->add_flag("--json", as_json, "JSON report");

  auto *ver = app.add_subcommand("verify", "rerun the reproducible claims");
  std::string scope = "paper", only;
  int max_n = 8;
  bool details = false;
  ver->add_option("scope", scope, "lemma-delta | paper | all")->check(CLI::IsMember({"lemma-delta", "paper", "all"}));
  ver->add_option("--max-n", max_n, "largest n for lemma-delta");
  ver->add_option("--only", only, "odd | even | small | quotients | structure");
  ver->add_flag("--details", details, "list every check");
  ver->add_flag("--json", as_json, "JSON report");

  auto *fp = app.add_subcommand("fingerprint", "hom/epi counts of a presentation into finite groups");
  std::string pres_file;
  std::vector<std::string> targets{"S3", "D4", "A4"}, group_files;
  fp->add_option("presentation", pres_file, "presentation JSON file")->required();
  fp->add_option("--targets", targets, "builtin targets")->delimiter(',');
  fp->add_option("--group", group_files, "Cayley table JSON files");
  fp->add_flag("--json", as_json, "JSON report");

  auto *arr = app.add_subcommand("arrangement", "graph, beta, v and the conjugation-free candidate");
  std::string arr_file;
  arr->add_option("file", arr_file, "arrangement JSON file")->required();
  arr->add_flag("--json", as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? Ok : InputFailed;
  }

  try {
    if (*an) return cmd_an(n, fidelity, emit, s3, as_json);
    if (*mono) return cmd_monodromy(builtin, events, as_json);
    if (*ver) return cmd_verify(scope, max_n, only, details, as_json);
    if (*fp) return cmd_fingerprint(pres_file, targets, group_files, as_json);
    if (*arr) return cmd_arrangement(arr_file, as_json);
  } catch (const io::InputError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return InputFailed;
  } catch (const std::invalid_argument &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return InputFailed;
  } catch (const std::out_of_range &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return InputFailed;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return CheckFailed;
  }
  return InputFailed;
}

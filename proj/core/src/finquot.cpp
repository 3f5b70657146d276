#include "clarr/finquot.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <stdexcept>

namespace clarr {

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : name_(std::move(name)), n_(static_cast<int>(table.size())) {
  if (n_ == 0) throw std::invalid_argument("group table is empty");
  table_.reserve(static_cast<size_t>(n_) * n_);
  for (auto &row : table) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n_) throw std::invalid_argument("group table entry out of range");
      table_.push_back(x);
    }
  }
  id_ = -1;
  for (int e = 0; e < n_ && id_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) id_ = e;
  }
  if (id_ < 0) throw std::invalid_argument("group table has no identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == id_ && mul(b, a) == id_) inv_[a] = b;
  if (std::count(inv_.begin(), inv_.end(), -1)) throw std::invalid_argument("group table lacks inverses");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("group table is not associative");
  if (labels.empty())
    for (int a = 0; a < n_; ++a) labels.push_back("g" + std::to_string(a));
  if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("label count differs from order");
  labels_ = std::move(labels);
}

FiniteGroupTable FiniteGroupTable::from_permutations(std::string name, const std::vector<std::vector<int>> &gens) {
  if (gens.empty()) throw std::invalid_argument("need at least one permutation");
  const size_t deg = gens[0].size();
  std::vector<int> idp(deg);
  std::iota(idp.begin(), idp.end(), 0);
  std::vector<std::vector<int>> elems{idp};
  std::map<std::vector<int>, int> index{{idp, 0}};
  auto compose = [&](const std::vector<int> &p, const std::vector<int> &q) {  // apply q then p
    std::vector<int> r(deg);
    for (size_t i = 0; i < deg; ++i) r[i] = p[q[i]];
    return r;
  };
  for (size_t k = 0; k < elems.size(); ++k)
    for (auto &g : gens) {
      if (g.size() != deg) throw std::invalid_argument("permutations of different degree");
      auto c = compose(elems[k], g);
      if (!index.count(c)) {
        index.emplace(c, static_cast<int>(elems.size()));
        elems.push_back(c);
      }
    }
  const size_t n = elems.size();
  std::vector<std::vector<int>> tab(n, std::vector<int>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) tab[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  for (auto &p : elems) {
    std::string s = "[";
    for (size_t i = 0; i < deg; ++i) s += (i ? " " : "") + std::to_string(p[i]);
    labels.push_back(s + "]");
  }
  return FiniteGroupTable(std::move(name), std::move(tab), std::move(labels));
}

bool FiniteGroupTable::abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != id_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroupTable::conjugacy_classes() const {
  std::vector<int> cls(n_, -1);
  int c = 0;
  for (int a = 0; a < n_; ++a) {
    if (cls[a] >= 0) continue;
    for (int g = 0; g < n_; ++g) cls[mul(mul(g, a), inv_[g])] = c;
    ++c;
  }
  return c;
}

int FiniteGroupTable::closure_size(const std::vector<int> &elems) const {
  std::vector<char> in(n_, 0);
  std::vector<int> list{id_};
  in[id_] = 1;
  for (size_t k = 0; k < list.size(); ++k)
    for (int g : elems) {
      int c = mul(list[k], g);
      if (!in[c]) {
        in[c] = 1;
        list.push_back(c);
      }
    }
  return static_cast<int>(list.size());
}

std::vector<std::vector<int>> FiniteGroupTable::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroupTable builtin_group(const std::string &name) {
  using P = std::vector<int>;
  if (name == "S3") return FiniteGroupTable::from_permutations(name, {P{1, 0, 2}, P{1, 2, 0}});
  if (name == "Z2") return FiniteGroupTable::from_permutations(name, {P{1, 0}});
  if (name == "Z3") return FiniteGroupTable::from_permutations(name, {P{1, 2, 0}});
  if (name == "Z6") return FiniteGroupTable::from_permutations(name, {P{1, 2, 3, 4, 5, 0}});
  if (name == "D4") return FiniteGroupTable::from_permutations(name, {P{1, 2, 3, 0}, P{2, 1, 0, 3}});
  if (name == "A4") return FiniteGroupTable::from_permutations(name, {P{1, 2, 0, 3}, P{0, 2, 3, 1}});
  if (name == "S4") return FiniteGroupTable::from_permutations(name, {P{1, 0, 2, 3}, P{1, 2, 3, 0}});
  throw std::invalid_argument("unknown builtin group: " + name);
}

namespace {

struct CompiledRelator {
  std::vector<std::pair<int, int64_t>> letters;  // (search position, exponent)
};

class Search {
 public:
  Search(const GroupPresentation &p, const FiniteGroupTable &H, HomMode mode) : H_(H), mode_(mode) {
    g_ = p.generators;
    auto rels = to_relator_form(p);
    order_generators(rels);
    std::vector<int> pos(g_ + 1);
    for (int i = 0; i < g_; ++i) pos[order_[i]] = i;
    checks_.assign(g_, {});
    for (auto &w : rels) {
      if (w.empty()) continue;
      CompiledRelator c;
      int last = 0;
      for (auto [gen, e] : w.letters()) {
        c.letters.push_back({pos[gen], e});
        last = std::max(last, pos[gen]);
      }
      checks_[last].push_back(std::move(c));
    }
    pow_.assign(H.order(), {});
    for (int a = 0; a < H.order(); ++a) {
      int o = H.element_order(a);
      pow_[a].resize(o);
      int x = H.identity();
      for (int k = 0; k < o; ++k, x = H.mul(x, a)) pow_[a][k] = x;
    }
  }

  int generators() const { return g_; }
  void visit(const std::function<void(const std::vector<int> &)> *f) { visit_ = f; }

  uint64_t count_with_first(int first) {
    if (g_ == 0) return leaf_ok() ? 1 : 0;
    img_.assign(g_, H_.identity());
    img_[0] = first;
    if (!consistent(0)) return 0;
    return descend(1);
  }

 private:
  const FiniteGroupTable &H_;
  HomMode mode_;
  int g_ = 0;
  std::vector<int> order_;  // search position -> generator
  std::vector<std::vector<CompiledRelator>> checks_;
  std::vector<std::vector<int>> pow_;
  std::vector<int> img_;
  const std::function<void(const std::vector<int> &)> *visit_ = nullptr;

  void order_generators(const std::vector<FreeWord> &rels) {
    std::vector<std::vector<int>> gens_of;
    for (auto &w : rels) {
      std::vector<int> s;
      for (auto [g, e] : w.letters()) s.push_back(g);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      gens_of.push_back(s);
    }
    std::vector<char> placed(g_ + 1, 0);
    for (int step = 0; step < g_; ++step) {
      int best = -1;
      long best_done = -1, best_touch = -1;
      for (int c = 1; c <= g_; ++c) {
        if (placed[c]) continue;
        long done = 0, touch = 0;
        for (auto &s : gens_of) {
          if (!std::binary_search(s.begin(), s.end(), c)) continue;
          ++touch;
          bool all = true;
          for (int x : s)
            if (x != c && !placed[x]) all = false;
          if (all) ++done;
        }
        if (done > best_done || (done == best_done && touch > best_touch)) {
          best = c;
          best_done = done;
          best_touch = touch;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
  }

  bool consistent(int position) const {
    for (auto &c : checks_[position]) {
      int x = H_.identity();
      for (auto [p, e] : c.letters) {
        auto &pw = pow_[img_[p]];
        int64_t o = static_cast<int64_t>(pw.size());
        x = H_.mul(x, pw[((e % o) + o) % o]);
      }
      if (x != H_.identity()) return false;
    }
    return true;
  }

  bool leaf_ok() const { return mode_ == HomMode::All || H_.closure_size(img_) == H_.order(); }

  uint64_t descend(int position) {
    if (position == g_) {
      if (!leaf_ok()) return 0;
      if (visit_) {
        std::vector<int> by_gen(g_);
        for (int i = 0; i < g_; ++i) by_gen[order_[i] - 1] = img_[i];
        (*visit_)(by_gen);
      }
      return 1;
    }
    uint64_t total = 0;
    for (int a = 0; a < H_.order(); ++a) {
      img_[position] = a;
      if (consistent(position)) total += descend(position + 1);
    }
    return total;
  }
};

}  // namespace

uint64_t hom_count(const GroupPresentation &p, const FiniteGroupTable &H, HomMode mode, HomCountOptions opt) {
  GroupPresentation q = opt.simplify ? tietze_simplify(p) : p;
  if (q.generators == 0) return mode == HomMode::All || H.order() == 1 ? 1 : 0;
  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    Search s(q, H, mode);
    uint64_t total = 0;
    for (int a = 0; a < H.order(); ++a) total += s.count_with_first(a);
    return total;
  }
  std::vector<std::future<uint64_t>> parts;
  for (int t = 0; t < threads; ++t)
    parts.push_back(std::async(std::launch::async, [&, t] {
      Search s(q, H, mode);
      uint64_t sub = 0;
      for (int a = t; a < H.order(); a += threads) sub += s.count_with_first(a);
      return sub;
    }));
  uint64_t total = 0;
  for (auto &f : parts) total += f.get();
  return total;
}

void for_each_hom(const GroupPresentation &p, const FiniteGroupTable &H, const std::function<void(const std::vector<int> &)> &f) {
  if (p.generators == 0) {
    f({});
    return;
  }
  Search s(p, H, HomMode::All);
  s.visit(&f);
  for (int a = 0; a < H.order(); ++a) s.count_with_first(a);
}

uint64_t hom_count_naive(const GroupPresentation &p, const FiniteGroupTable &H, HomMode mode) {
  auto rels = to_relator_form(p);
  const int g = p.generators;
  std::vector<int> img(g + 1, H.identity());
  uint64_t total = 0;
  for (;;) {
    bool ok = true;
    for (auto &w : rels) {
      int x = H.identity();
      for (int s : w.expand()) x = H.mul(x, s > 0 ? img[s] : H.inv(img[-s]));
      if (x != H.identity()) {
        ok = false;
        break;
      }
    }
    if (ok && mode == HomMode::Epi) ok = H.closure_size(std::vector<int>(img.begin() + 1, img.end())) == H.order();
    if (ok) ++total;
    int i = 1;
    while (i <= g && ++img[i] == H.order()) img[i++] = 0;
    if (i > g) break;
  }
  return total;
}

uint64_t automorphism_count(const FiniteGroupTable &H) {
  const int n = H.order();
  if (n == 1) return 1;
  // greedy generating set
  std::vector<int> gens;
  while (H.closure_size(gens) < n) {
    int best = -1, best_size = 0;
    for (int a = 0; a < n; ++a) {
      auto t = gens;
      t.push_back(a);
      int s = H.closure_size(t);
      if (s > best_size) {
        best = a;
        best_size = s;
      }
    }
    gens.push_back(best);
  }
  // every element as a word in gens (BFS), then test each assignment of images
  std::vector<std::pair<int, int>> parent(n, {-1, -1});  // (previous element, generator slot)
  std::vector<int> bfs{H.identity()};
  std::vector<char> seen(n, 0);
  seen[H.identity()] = 1;
  for (size_t k = 0; k < bfs.size(); ++k)
    for (size_t j = 0; j < gens.size(); ++j) {
      int c = H.mul(bfs[k], gens[j]);
      if (!seen[c]) {
        seen[c] = 1;
        parent[c] = {bfs[k], static_cast<int>(j)};
        bfs.push_back(c);
      }
    }
  uint64_t count = 0;
  std::vector<int> choice(gens.size(), 0), f(n);
  for (;;) {
    f[H.identity()] = H.identity();
    for (size_t k = 1; k < bfs.size(); ++k) {
      auto [prev, j] = parent[bfs[k]];
      f[bfs[k]] = H.mul(f[prev], choice[j]);
    }
    bool ok = true;
    std::vector<char> hit(n, 0);
    for (int a = 0; a < n && ok; ++a) {
      if (hit[f[a]]) ok = false;
      hit[f[a]] = 1;
    }
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = f[H.mul(a, b)] == H.mul(f[a], f[b]);
    if (ok) ++count;
    size_t i = 0;
    while (i < choice.size() && ++choice[i] == n) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return count;
}

uint64_t epi_classes(const GroupPresentation &p, const FiniteGroupTable &H, HomCountOptions opt) {
  return hom_count(p, H, HomMode::Epi, opt) / automorphism_count(H);
}

Fingerprint fingerprint(const GroupPresentation &p, const std::vector<FiniteGroupTable> &targets, HomCountOptions opt) {
  Fingerprint f;
  GroupPresentation q = opt.simplify ? tietze_simplify(p) : p;
  HomCountOptions inner = opt;
  inner.simplify = false;
  for (auto &H : targets) f.push_back({H.name(), hom_count(q, H, HomMode::All, inner), hom_count(q, H, HomMode::Epi, inner)});
  return f;
}

std::string fingerprint_str(const Fingerprint &f) {
  std::string s;
  for (auto &e : f) {
    if (!s.empty()) s += ", ";
    s += e.target + ": " + std::to_string(e.all) + "/" + std::to_string(e.epi);
  }
  return s;
}

}  // namespace clarr

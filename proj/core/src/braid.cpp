#include "clarr/braid.hpp"

#include <cstdlib>
#include <stdexcept>

namespace clarr {

Braid::Braid(int m, std::vector<int> l) : strands(m), letters(std::move(l)) {
  if (m < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int x : letters)
    if (x == 0 || std::abs(x) > m - 1)
      throw std::out_of_range("sigma_" + std::to_string(std::abs(x)) + " not in B_" + std::to_string(m));
}

Braid Braid::inverse() const {
  Braid b;
  b.strands = strands;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) b.letters.push_back(-*it);
  return b;
}

Braid Braid::operator*(const Braid &o) const {
  if (o.strands != strands) throw std::invalid_argument("strand count mismatch");
  Braid b = *this;
  b.letters.insert(b.letters.end(), o.letters.begin(), o.letters.end());
  return b;
}

Braid Braid::pow(int k) const {
  Braid base = k < 0 ? inverse() : *this, out(strands, {});
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

Braid Braid::shifted(int s, int new_strands) const {
  std::vector<int> l;
  l.reserve(letters.size());
  for (int x : letters) l.push_back(x > 0 ? x + s : x - s);
  return Braid(new_strands, std::move(l));
}

std::string Braid::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (int x : letters) s += (x > 0 ? "s" : "S") + std::to_string(std::abs(x));
  return s;
}

std::vector<FreeWord> artin_images(const Braid &b) {
  const int m = b.strands;
  std::vector<FreeWord> img(m + 1);
  for (int i = 1; i <= m; ++i) img[i] = FreeWord::gen(i);
  // Phi_k = Phi_{k-1} o act(l_k): only two images change per letter.
  for (int x : b.letters) {
    int i = std::abs(x);
    FreeWord a = img[i], c = img[i + 1];
    if (x > 0) {
      img[i] = a * c * a.inverse();
      img[i + 1] = a;
    } else {
      img[i] = c;
      img[i + 1] = c.inverse() * a * c;
    }
  }
  return img;
}

FreeWord artin_act(const Braid &b, const FreeWord &w) {
  if (w.max_generator() > b.strands) throw std::out_of_range("word uses a generator beyond the strand count");
  return w.substitute(artin_images(b));
}

bool braid_equal(const Braid &a, const Braid &b) {
  if (a.strands != b.strands) throw std::invalid_argument("braid_equal: strand counts differ");
  return artin_images(a) == artin_images(b);
}

Braid garside(int m) {
  if (m < 2) throw std::invalid_argument("garside needs m >= 2");
  std::vector<int> l;
  for (int i = m - 1; i >= 1; --i)
    for (int j = i; j <= m - 1; ++j) l.push_back(j);
  return Braid(m, l);
}

Braid half_twist_block(int a, int b, int m) {
  if (a < 1 || b > m || a >= b) throw std::out_of_range("bad block <" + std::to_string(a) + "," + std::to_string(b) + "> in B_" + std::to_string(m));
  return garside(b - a + 1).shifted(a - 1, m);
}

Braid delta_prime(int n) {
  if (n < 2) throw std::invalid_argument("delta_prime needs n >= 2");
  // Garside pattern of B_{n+1} with sigma_n replaced by sigma_{n+1} sigma_n sigma_{n+1}.
  std::vector<int> l;
  for (int i = n; i >= 1; --i)
    for (int j = i; j <= n; ++j) {
      if (j == n) {
        l.insert(l.end(), {n + 1, n, n + 1});
      } else {
        l.push_back(j);
      }
    }
  return Braid(n + 2, l);
}

std::vector<LemmaDeltaRow> verify_lemma_delta(int n_max) {
  std::vector<LemmaDeltaRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    Braid lhs = delta_prime(n);
    std::vector<int> tail;
    for (int i = 2; i <= n; ++i) tail.push_back(i);
    Braid rhs = garside(n + 2) * Braid(n + 2, tail);
    rows.push_back({n, braid_equal(lhs, rhs), lhs.letters.size(), rhs.letters.size()});
  }
  return rows;
}

}  // namespace clarr

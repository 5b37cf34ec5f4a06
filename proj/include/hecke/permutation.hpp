#pragma once

// Permutations in one-line notation, with the reduced-word machinery the
// Hecke basis needs: length by inversion count, a staircase canonical
// reduced word, and decomposition along the S_m coset chain.

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class Permutation {
 public:
  /// Identity on {1..n}.
  explicit Permutation(int n) : img_(size_t(n)) {
    if (n < 1) throw std::invalid_argument("Permutation: rank must be >= 1");
    std::iota(img_.begin(), img_.end(), 1);
  }

  static Permutation from_one_line(std::vector<int> img) {
    Permutation p;
    p.img_ = std::move(img);
    std::vector<bool> seen(p.img_.size(), false);
    for (int v : p.img_) {
      if (v < 1 || v > int(p.img_.size()) || seen[size_t(v - 1)])
        throw std::invalid_argument("Permutation: not a permutation of 1..n");
      seen[size_t(v - 1)] = true;
    }
    if (p.img_.empty()) throw std::invalid_argument("Permutation: empty");
    return p;
  }

  /// Product of adjacent transpositions s_i = (i, i+1), applied left to right.
  static Permutation from_word(int n, const std::vector<int>& word) {
    Permutation p(n);
    for (int i : word) p = p.right_mul_s(i);
    return p;
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p(n);
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw std::invalid_argument("Permutation::transposition: bad positions");
    std::swap(p.img_[size_t(a - 1)], p.img_[size_t(b - 1)]);
    return p;
  }

  int n() const { return int(img_.size()); }
  int operator()(int i) const { return img_[size_t(i - 1)]; }
  const std::vector<int>& one_line() const { return img_; }

  /// (w * v)(x) = w(v(x)).
  friend Permutation operator*(const Permutation& w, const Permutation& v) {
    if (w.n() != v.n()) throw std::invalid_argument("Permutation: rank mismatch");
    Permutation r = w;
    for (int i = 1; i <= w.n(); ++i) r.img_[size_t(i - 1)] = w(v(i));
    return r;
  }

  Permutation inverse() const {
    Permutation r = *this;
    for (int i = 1; i <= n(); ++i) r.img_[size_t(img_[size_t(i - 1)] - 1)] = i;
    return r;
  }

  /// w * s_i: swaps the entries at positions i, i+1.
  Permutation right_mul_s(int i) const {
    if (i < 1 || i >= n()) throw std::invalid_argument("Permutation: generator index out of range");
    Permutation r = *this;
    std::swap(r.img_[size_t(i - 1)], r.img_[size_t(i)]);
    return r;
  }

  /// True iff right-multiplying by s_i raises the length.
  bool ascent_at(int i) const { return img_[size_t(i - 1)] < img_[size_t(i)]; }

  /// Coxeter length.
  int inversions() const {
    int c = 0;
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j)
        if (img_[size_t(i)] > img_[size_t(j)]) ++c;
    return c;
  }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if (img_[size_t(i - 1)] != i) return false;
    return true;
  }

  /// Fixes every position > m.
  bool fixes_above(int m) const {
    for (int i = m + 1; i <= n(); ++i)
      if (img_[size_t(i - 1)] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < n(); ++i) {
      if (i) out += ",";
      out += std::to_string(img_[size_t(i)]);
    }
    return out + "]";
  }

 private:
  Permutation() = default;
  std::vector<int> img_;
};

/// Extend with fixed points to rank n.
inline Permutation promote(const Permutation& w, int n) {
  if (n < w.n()) throw std::invalid_argument("promote: rank smaller than current");
  std::vector<int> img = w.one_line();
  for (int i = w.n() + 1; i <= n; ++i) img.push_back(i);
  return Permutation::from_one_line(std::move(img));
}

/// Restrict to rank n; w must fix every position above n.
inline Permutation restrict_rank(const Permutation& w, int n) {
  if (n > w.n() || !w.fixes_above(n))
    throw std::invalid_argument("restrict_rank: permutation moves a dropped point");
  std::vector<int> img(w.one_line().begin(), w.one_line().begin() + n);
  return Permutation::from_one_line(std::move(img));
}

struct CosetDecomposition {
  Permutation u;         // fixes m+1
  std::optional<int> k;  // w = u * s_m s_{m-1} ... s_k; empty when w fixes m+1
};

/// Decompose w in S_{m+1} as u * (s_m s_{m-1} ... s_k) with u in S_m.
/// Lengths add: inv(w) = inv(u) + (m - k + 1).
inline CosetDecomposition coset_decompose(const Permutation& w, int m) {
  if (m < 1 || m + 1 > w.n() || !w.fixes_above(m + 1))
    throw std::invalid_argument("coset_decompose: w not in S_{m+1}");
  if (w(m + 1) == m + 1) return {w, std::nullopt};
  int k = w.inverse()(m + 1);  // position mapped to m+1
  // right-divide by the cycle s_m ... s_k, i.e. multiply by s_k ... s_m
  Permutation u = w;
  for (int i = k; i <= m; ++i) u = u.right_mul_s(i);
  return {u, k};
}

/// Staircase normal form: the unique reduced word that is a concatenation of
/// descending runs (s_m s_{m-1} .. s_k) with strictly increasing run tops.
inline std::vector<int> canonical_reduced_word(Permutation w) {
  std::vector<std::pair<int, int>> runs;  // (m, k), collected top-down
  for (int m = w.n() - 1; m >= 1; --m) {
    CosetDecomposition d = coset_decompose(w, m);
    if (d.k) runs.emplace_back(m, *d.k);
    w = d.u;
  }
  std::vector<int> word;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    for (int i = it->first; i >= it->second; --i) word.push_back(i);
  return word;
}

/// "s2 s1" (empty string for the identity).
inline std::string word_str(const std::vector<int>& word) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += "s" + std::to_string(word[i]);
  }
  return out;
}

inline std::vector<Permutation> all_permutations(int n) {
  auto img = std::vector<int>(size_t(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace hecke

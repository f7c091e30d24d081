#include "hecke/combinatorics/perm.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= size() || seen[v]) fail(ErrorCode::InvalidParams, "not a permutation");
    seen[v] = true;
  }
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) fail(ErrorCode::InvalidParams, "simple reflection out of range");
  Perm p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm p(n);
  for (int i : word) p = p * simple(n, i);
  return p;
}

int Perm::length() const {
  int l = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++l;
  return l;
}

bool Perm::right_ascent(int i) const {
  // w s_i swaps the values i-1 and i
  int a = -1, b = -1;
  for (int k = 0; k < size(); ++k) {
    if (img_[k] == i - 1) a = k;
    if (img_[k] == i) b = k;
  }
  return a < b;
}

bool Perm::left_ascent(int i) const { return img_[i - 1] < img_[i]; }

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm w = *this;
  while (!w.is_identity()) {
    for (int i = 1; i < size(); ++i)
      if (!w.right_ascent(i)) {
        word.push_back(i);
        w = w * simple(size(), i);
        break;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm Perm::inverse() const {
  std::vector<int> inv(size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  if (size() != o.size()) fail(ErrorCode::ShapeMismatch, "permutation sizes differ");
  std::vector<int> r(size());
  for (int i = 0; i < size(); ++i) r[i] = o.img_[img_[i]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

int Perm::rank() const {
  int n = size(), k = 0;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < img_[i]; ++v)
      if (!used[v]) ++smaller;
    k += smaller * factorial(n - 1 - i);
    used[img_[i]] = true;
  }
  return k;
}

Perm Perm::unrank(int n, int k) {
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<int> img;
  for (int i = 0; i < n; ++i) {
    int f = factorial(n - 1 - i);
    int q = k / f;
    k %= f;
    img.push_back(avail[q]);
    avail.erase(avail.begin() + q);
  }
  Perm p;
  p.img_ = std::move(img);
  return p;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(img_[i] + 1);
  return s + "]";
}

int factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  int N = factorial(n);
  out.reserve(N);
  for (int k = 0; k < N; ++k) out.push_back(Perm::unrank(n, k));
  return out;
}

}  // namespace hecke

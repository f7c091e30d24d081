#include "hecke/combinatorics/composition.hpp"

#include <cctype>
#include <functional>

#include "hecke/errors.hpp"

namespace hecke {

int Composition::n() const { return sum(1, kappa()); }

int Composition::sum(int i, int j) const {
  int s = 0;
  for (int k = i; k <= j; ++k) s += parts.at(k - 1);
  return s;
}

std::string Composition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

Composition Composition::parse(const std::string& text) {
  Composition c;
  std::string num;
  bool open = false, closed = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '[' && !open) {
      open = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) && open && !closed) {
      num += ch;
    } else if ((ch == ',' || ch == ']') && open && !closed) {
      if (num.empty()) {
        if (ch == ',' || !c.parts.empty()) fail(ErrorCode::ParseError, "malformed composition '" + text + "'");
      } else {
        c.parts.push_back(std::stoi(num));
      }
      num.clear();
      if (ch == ']') closed = true;
    } else {
      fail(ErrorCode::ParseError, "malformed composition '" + text + "'");
    }
  }
  if (!closed || c.parts.empty()) fail(ErrorCode::ParseError, "malformed composition '" + text + "'");
  return c;
}

std::vector<Composition> enumerate_compositions(int n, int kappa) {
  std::vector<Composition> out;
  std::vector<int> cur(kappa);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == kappa - 1) {
      cur[i] = left;
      out.push_back(Composition{cur});
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (kappa >= 1) rec(0, n);
  return out;
}

int GroupLayout::r() const { return first_comp(kappa()); }

int GroupLayout::first_comp(int alpha) const {
  int s = 0;
  for (int a = 0; a < alpha; ++a) s += p * t[a];
  return s;
}

int GroupLayout::group_of(int comp) const {
  for (int a = 0; a < kappa(); ++a)
    if (comp < end_comp(a)) return a;
  fail(ErrorCode::InvalidParams, "component outside the layout");
}

Perm w_ab(int n, int a, int b) {
  if (a < 0 || b < 0 || a + b > n) fail(ErrorCode::InvalidParams, "w_ab needs a, b >= 0 and a + b <= n");
  std::vector<int> cycle;
  for (int i = a + b - 1; i >= 1; --i) cycle.push_back(i);
  std::vector<int> word;
  for (int k = 0; k < b; ++k) word.insert(word.end(), cycle.begin(), cycle.end());
  return Perm::from_word(n, word);
}

Perm w_b(const Composition& b) {
  int n = b.n();
  Perm w(n);
  for (int alpha = b.kappa(); alpha >= 2; --alpha) w = w * w_ab(n, b.parts[alpha - 1], b.sum(1, alpha - 1));
  return w;
}

std::vector<Perm> coset_reps(const Composition& b) {
  int n = b.n();
  std::vector<Perm> out;
  for (const Perm& d : all_perms(n)) {
    bool ok = true;
    int start = 0;
    for (int part : b.parts) {
      for (int i = start; i + 1 < start + part; ++i)
        if (d(i) > d(i + 1)) ok = false;
      start += part;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

namespace {

void check_layout(const Multipartition& lam, const Composition& b, const GroupLayout& g) {
  if (g.kappa() != b.kappa() || g.r() != lam.r() || b.n() != lam.size())
    fail(ErrorCode::ShapeMismatch, "composition, layout and multipartition disagree");
}

}  // namespace

bool in_lambda_b(const Multipartition& lam, const Composition& b, const GroupLayout& g) {
  check_layout(lam, b, g);
  for (int a = 0; a < g.kappa(); ++a) {
    int s = 0;
    for (int c = g.first_comp(a); c < g.end_comp(a); ++c) s += lam.comp_size(c);
    if (s != b.parts[a]) return false;
  }
  return true;
}

std::vector<Tableau> std_b(const Multipartition& lam, const Composition& b, const GroupLayout& g) {
  check_layout(lam, b, g);
  std::vector<Tableau> out;
  for (const Tableau& t : enumerate_standard_tableaux(lam)) {
    bool ok = true;
    for (int a = 1; a <= g.kappa() && ok; ++a)
      for (int k = 1; k <= b.sum(1, a); ++k)
        if (t.comp_of(k) >= g.end_comp(a - 1)) ok = false;
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<Tableau> std_b_plus(const Multipartition& lam, const Composition& b, const GroupLayout& g) {
  check_layout(lam, b, g);
  std::vector<Tableau> out;
  for (const Tableau& t : enumerate_standard_tableaux(lam)) {
    bool ok = true;
    for (int a = 1; a <= g.kappa() && ok; ++a)
      for (int k = b.sum(1, a - 1) + 1; k <= b.sum(1, a); ++k)
        if (g.group_of(t.comp_of(k)) != a - 1) ok = false;
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<Multipartition> split_lambda(const Multipartition& lam, const Composition& b, const GroupLayout& g) {
  if (!in_lambda_b(lam, b, g)) fail(ErrorCode::NotInLambdaB, lam.to_string() + " not in Lambda_b^+ for b = " + b.to_string());
  std::vector<Multipartition> out;
  for (int a = 0; a < g.kappa(); ++a) {
    std::vector<Partition> c(lam.comp.begin() + g.first_comp(a), lam.comp.begin() + g.end_comp(a));
    out.push_back(Multipartition(c));
  }
  return out;
}

Multipartition join_lambda(const std::vector<Multipartition>& parts) {
  std::vector<Partition> c;
  for (const auto& m : parts) c.insert(c.end(), m.comp.begin(), m.comp.end());
  return Multipartition(c);
}

Multipartition omega_b(const Composition& b, const GroupLayout& g) {
  if (g.kappa() != b.kappa()) fail(ErrorCode::ShapeMismatch, "composition length differs from group count");
  std::vector<Partition> c(g.r());
  for (int a = 0; a < g.kappa(); ++a)
    if (b.parts[a] > 0) c[g.end_comp(a) - 1] = Partition(b.parts[a], 1);
  return Multipartition(c);
}

}  // namespace hecke

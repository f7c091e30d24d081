#include "hecke/combinatorics/multipartition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Multipartition::Multipartition(std::vector<Partition> c) : comp(std::move(c)) {
  for (auto& p : comp) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1]))
        fail(ErrorCode::InvalidParams, "component is not a partition");
  }
}

int Multipartition::size() const {
  int s = 0;
  for (int i = 0; i < r(); ++i) s += comp_size(i);
  return s;
}

int Multipartition::comp_size(int s) const {
  int t = 0;
  for (int v : comp[s]) t += v;
  return t;
}

std::string Multipartition::to_string() const {
  std::string s = "[";
  for (int k = 0; k < r(); ++k) {
    s += k ? ",[" : "[";
    for (size_t i = 0; i < comp[k].size(); ++i) s += (i ? "," : "") + std::to_string(comp[k][i]);
    s += "]";
  }
  return s + "]";
}

Multipartition Multipartition::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto bad = [&]() { fail(ErrorCode::ParseError, "malformed multipartition '" + text + "'"); };
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') bad();
  std::vector<Partition> comps;
  size_t i = 1;
  if (t[i] != '[') {
    // a bare partition "[2,1]" is read as a 1-multipartition
    Partition p;
    std::string num;
    for (; i < t.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(t[i]))) {
        num += t[i];
      } else if (t[i] == ',' || t[i] == ']') {
        if (!num.empty()) p.push_back(std::stoi(num));
        else if (t[i] == ',') bad();
        num.clear();
      } else {
        bad();
      }
    }
    return Multipartition({p});
  }
  while (i < t.size() - 1) {
    if (t[i] != '[') bad();
    ++i;
    Partition p;
    std::string num;
    while (i < t.size() && t[i] != ']') {
      if (std::isdigit(static_cast<unsigned char>(t[i]))) {
        num += t[i];
      } else if (t[i] == ',') {
        if (num.empty()) bad();
        p.push_back(std::stoi(num));
        num.clear();
      } else {
        bad();
      }
      ++i;
    }
    if (i >= t.size()) bad();
    if (!num.empty()) p.push_back(std::stoi(num));
    comps.push_back(p);
    ++i;
    if (i < t.size() - 1) {
      if (t[i] != ',') bad();
      ++i;
    }
  }
  return Multipartition(comps);
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<int> dominance_key(const Multipartition& a) {
  int n = a.size();
  std::vector<int> key;
  int acc = 0;
  for (int s = 0; s < a.r(); ++s)
    for (int i = 0; i < std::max(n, 1); ++i) {
      if (i < static_cast<int>(a.comp[s].size())) acc += a.comp[s][i];
      key.push_back(acc);
    }
  return key;
}

std::vector<Multipartition> enumerate_multipartitions(int n, int r) {
  if (n < 0 || r < 1) fail(ErrorCode::InvalidParams, "need n >= 0 and r >= 1");
  std::vector<std::vector<Partition>> parts(n + 1);
  for (int k = 0; k <= n; ++k) parts[k] = enumerate_partitions(k);
  std::vector<Multipartition> out;
  std::vector<Partition> cur(r);
  std::function<void(int, int)> rec = [&](int s, int left) {
    if (s == r - 1) {
      for (const auto& p : parts[left]) {
        cur[s] = p;
        out.push_back(Multipartition(cur));
      }
      return;
    }
    for (int k = 0; k <= left; ++k)
      for (const auto& p : parts[k]) {
        cur[s] = p;
        rec(s + 1, left - k);
      }
  };
  rec(0, n);
  std::sort(out.begin(), out.end(), [](const Multipartition& a, const Multipartition& b) {
    return dominance_key(a) > dominance_key(b);
  });
  return out;
}

bool dominance_ge(const Multipartition& a, const Multipartition& b) {
  if (a.r() != b.r() || a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "dominance needs equal n and r");
  std::vector<int> ka = dominance_key(a), kb = dominance_key(b);
  for (size_t i = 0; i < ka.size(); ++i)
    if (ka[i] < kb[i]) return false;
  return true;
}

long hook_count(const Multipartition& a) {
  // n! / prod hooks over all components at once
  long num = 1;
  for (int k = 2; k <= a.size(); ++k) num *= k;
  long den = 1;
  for (const auto& p : a.comp)
    for (size_t i = 0; i < p.size(); ++i)
      for (int j = 0; j < p[i]; ++j) {
        int arm = p[i] - j - 1;
        int leg = 0;
        for (size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
        den *= arm + leg + 1;
      }
  return num / den;
}

Tableau from_entries(const Multipartition& shape, std::vector<std::vector<std::vector<int>>> entries) {
  Tableau t;
  t.shape = shape;
  t.entries = std::move(entries);
  int n = shape.size();
  t.pos.assign(n, Node{});
  std::vector<bool> seen(n, false);
  if (static_cast<int>(t.entries.size()) != shape.r()) fail(ErrorCode::ShapeMismatch, "tableau component count");
  for (int s = 0; s < shape.r(); ++s) {
    if (t.entries[s].size() != shape.comp[s].size()) fail(ErrorCode::ShapeMismatch, "tableau row count");
    for (size_t i = 0; i < shape.comp[s].size(); ++i) {
      if (static_cast<int>(t.entries[s][i].size()) != shape.comp[s][i]) fail(ErrorCode::ShapeMismatch, "tableau row length");
      for (int j = 0; j < shape.comp[s][i]; ++j) {
        int k = t.entries[s][i][j];
        if (k < 1 || k > n || seen[k - 1]) fail(ErrorCode::InvalidParams, "tableau entries must be 1..n once each");
        seen[k - 1] = true;
        t.pos[k - 1] = Node{static_cast<int>(i), j, s};
      }
    }
  }
  return t;
}

bool Tableau::is_standard() const {
  for (int s = 0; s < shape.r(); ++s)
    for (size_t i = 0; i < entries[s].size(); ++i)
      for (size_t j = 0; j < entries[s][i].size(); ++j) {
        if (j + 1 < entries[s][i].size() && entries[s][i][j] > entries[s][i][j + 1]) return false;
        if (i + 1 < entries[s].size() && j < entries[s][i + 1].size() && entries[s][i][j] > entries[s][i + 1][j])
          return false;
      }
  return true;
}

Multipartition Tableau::shape_k(int k) const {
  std::vector<Partition> c(shape.r());
  for (int s = 0; s < shape.r(); ++s) {
    for (const auto& row : entries[s]) {
      int len = 0;
      for (int v : row)
        if (v <= k) ++len;
      if (len > 0) c[s].push_back(len);
    }
  }
  return Multipartition(c);
}

Tableau Tableau::act(const Perm& w) const {
  auto e = entries;
  for (auto& comp : e)
    for (auto& row : comp)
      for (int& v : row) v = w(v - 1) + 1;
  return from_entries(shape, std::move(e));
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int s = 0; s < shape.r(); ++s) {
    os << (s ? "," : "") << "[";
    for (size_t i = 0; i < entries[s].size(); ++i) {
      os << (i ? "," : "") << "[";
      for (size_t j = 0; j < entries[s][i].size(); ++j) os << (j ? "," : "") << entries[s][i][j];
      os << "]";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Tableau superstandard(const Multipartition& shape) {
  std::vector<std::vector<std::vector<int>>> e(shape.r());
  int k = 1;
  for (int s = 0; s < shape.r(); ++s)
    for (int len : shape.comp[s]) {
      std::vector<int> row;
      for (int j = 0; j < len; ++j) row.push_back(k++);
      e[s].push_back(row);
    }
  return from_entries(shape, std::move(e));
}

Perm tableau_perm(const Tableau& t) {
  Tableau top = superstandard(t.shape);
  std::vector<int> img(t.n());
  for (int k = 1; k <= t.n(); ++k) img[k - 1] = t.at(top.pos[k - 1]) - 1;
  return Perm(img);
}

std::vector<Tableau> enumerate_standard_tableaux(const Multipartition& shape) {
  int n = shape.size();
  std::vector<std::vector<std::vector<int>>> e(shape.r());
  for (int s = 0; s < shape.r(); ++s)
    for (int len : shape.comp[s]) e[s].push_back(std::vector<int>(len, 0));
  std::vector<std::vector<int>> filled(shape.r());
  for (int s = 0; s < shape.r(); ++s) filled[s].assign(shape.comp[s].size(), 0);
  std::vector<Tableau> out;
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(from_entries(shape, e));
      return;
    }
    for (int s = 0; s < shape.r(); ++s)
      for (size_t i = 0; i < shape.comp[s].size(); ++i) {
        int j = filled[s][i];
        if (j >= shape.comp[s][i]) continue;
        if (i > 0 && filled[s][i - 1] <= j) continue;
        e[s][i][j] = k;
        ++filled[s][i];
        rec(k + 1);
        --filled[s][i];
        e[s][i][j] = 0;
      }
  };
  rec(1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return tableau_perm(a).images() < tableau_perm(b).images();
  });
  return out;
}

}  // namespace hecke

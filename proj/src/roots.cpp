#include "nichols/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nichols/errors.hpp"

namespace nichols {

std::string root_key(const RootVector& v) {
  std::string k;
  for (const auto& x : v) {
    for (const auto& q : x.coeffs()) {
      k += q.get_str();
      k += ',';
    }
    k += ';';
  }
  return k;
}

int root_sign(const RootVector& v) {
  for (const auto& x : v) {
    int s = x.sign();
    if (s != 0) return s;
  }
  return 0;
}

FieldElement RootSystem::inner(const RootVector& x, const RootVector& y) const {
  FieldElement s(field_, 0);
  for (int i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < rank(); ++j) {
      if (y[j].is_zero()) continue;
      s += x[i] * gram_[i][j] * y[j];
    }
  }
  return s;
}

RootVector RootSystem::reflect(int t, const RootVector& v) const {
  const RootVector& a = positive_[t];
  FieldElement f = inner(v, a) * Rational(2);
  RootVector out = v;
  for (int i = 0; i < rank(); ++i) out[i] -= f * a[i];
  return out;
}

std::optional<SignedRoot> RootSystem::find(const RootVector& v) const {
  int s = root_sign(v);
  if (s == 0) return std::nullopt;
  RootVector p = v;
  if (s < 0)
    for (auto& x : p) x = -x;
  auto key = root_key(p);
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(key, -1));
  if (it == lookup_.end() || it->first != key) return std::nullopt;
  return SignedRoot{it->second, s};
}

FieldElement RootSystem::height(int i) const {
  FieldElement h(field_, 0);
  for (const auto& x : positive_[i]) h += x;
  return h;
}

std::shared_ptr<const RootSystem> generate_root_system(const CoxeterSystem& cs, std::size_t max_positive) {
  Field f = Field::for_coxeter_matrix(cs.m);
  std::shared_ptr<RootSystem> rs(new RootSystem(cs, f));
  const int r = cs.rank;
  rs->gram_.assign(r, std::vector<FieldElement>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs->gram_[i][j] = -cos_pi_over(f, cs.m[i][j]);

  std::map<std::string, int> index;
  std::deque<int> queue;
  auto add = [&](RootVector v) {
    auto key = root_key(v);
    if (index.count(key)) return;
    if (rs->positive_.size() >= max_positive)
      throw BudgetExceeded("more than " + std::to_string(max_positive) +
                           " positive roots; the group is infinite or too large");
    index.emplace(key, static_cast<int>(rs->positive_.size()));
    queue.push_back(static_cast<int>(rs->positive_.size()));
    rs->positive_.push_back(std::move(v));
  };
  for (int i = 0; i < r; ++i) {
    RootVector e(r, FieldElement(f, 0));
    e[i] = FieldElement(f, 1);
    add(e);
  }
  // Every positive root is reachable from a simple root through simple
  // reflections that keep it positive.
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      if (k == i) continue;
      RootVector v = rs->reflect(i, rs->positive_[k]);
      int s = root_sign(v);
      if (s == 0) throw InvariantViolation("reflection produced a non-root");
      if (s > 0) add(std::move(v));
    }
  }
  for (const auto& [key, idx] : index) rs->lookup_.emplace_back(key, idx);

  const int n = rs->size();
  rs->inner_.assign(n, std::vector<FieldElement>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs->inner_[i][j] = rs->inner(rs->positive_[i], rs->positive_[j]);
  rs->table_.assign(n, std::vector<SignedRoot>(n));
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < n; ++i) {
      RootVector v = rs->positive_[i];
      FieldElement c = rs->inner_[i][t] * Rational(2);
      for (int k = 0; k < r; ++k) v[k] -= c * rs->positive_[t][k];
      auto hit = rs->find(v);
      if (!hit) throw InvariantViolation("root system is not closed under reflections");
      rs->table_[t][i] = *hit;
    }

  rs->orbit_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (rs->orbit_[i] >= 0) continue;
    int id = rs->orbit_count_++;
    std::vector<int> stack{i};
    rs->orbit_[i] = id;
    while (!stack.empty()) {
      int k = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t) {
        int j = rs->table_[t][k].index;
        if (rs->orbit_[j] < 0) {
          rs->orbit_[j] = id;
          stack.push_back(j);
        }
      }
    }
  }
  return rs;
}

int field_rank(std::vector<std::vector<FieldElement>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    FieldElement inv = rows[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      FieldElement f = rows[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

SignedRoot dihedral_gamma(const DihedralSubsystem& d, int k) {
  const int m = d.m;
  k %= 2 * m;
  if (k < 0) k += 2 * m;
  if (k < m) return {d.gamma[k], 1};
  return {d.gamma[k - m], -1};
}

std::vector<DihedralSubsystem> dihedral_subsystems(const RootSystem& rs) {
  const int n = rs.size();
  std::set<std::vector<int>> seen;
  std::vector<DihedralSubsystem> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> members;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) {
          members.push_back(c);
          continue;
        }
        if (field_rank({rs.root(a), rs.root(b), rs.root(c)}) == 2) members.push_back(c);
      }
      if (!seen.insert(members).second) continue;
      // Simple roots: s_beta keeps the other subsystem positive roots positive.
      std::vector<int> simple;
      for (int beta : members) {
        bool ok = true;
        for (int c : members)
          if (c != beta && rs.reflect(beta, c).sign < 0) ok = false;
        if (ok) simple.push_back(beta);
      }
      if (simple.size() != 2) throw InvariantViolation("rank-2 subsystem without two simple roots");
      DihedralSubsystem d;
      d.m = static_cast<int>(members.size());
      const int m = d.m;
      d.gamma.assign(m, -1);
      d.gamma[0] = simple[0];
      d.gamma[m - 1] = simple[1];
      // gamma_{i+1} = -s_{gamma_i}(gamma_{i-1}), gamma_{-1} = -gamma_{m-1}
      SignedRoot prev{simple[1], -1};
      SignedRoot cur{simple[0], 1};
      for (int i = 0; i + 1 < m; ++i) {
        SignedRoot next = rs.reflect(cur.index, prev);
        next.sign = -next.sign;
        if (next.sign < 0) throw InvariantViolation("dihedral ordering left the positive roots");
        if (i + 1 == m - 1 && next.index != simple[1])
          throw InvariantViolation("dihedral ordering did not close up");
        d.gamma[i + 1] = next.index;
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(d));
    }
  return out;
}

}  // namespace nichols

#include "nichols/braided.hpp"

#include <sstream>

namespace nichols {

Word Word::prefix(int k) const {
  Word w;
  for (int i = 0; i < k; ++i) w.push_back((*this)[i]);
  return w;
}

Word Word::suffix_from(int k) const {
  Word w;
  for (int i = k; i < size(); ++i) w.push_back((*this)[i]);
  return w;
}

Word Word::reversed() const {
  Word w;
  for (int i = size(); i-- > 0;) w.push_back((*this)[i]);
  return w;
}

Word Word::with_front(int a) const {
  Word w;
  w.push_back(a);
  for (int i = 0; i < size(); ++i) w.push_back((*this)[i]);
  return w;
}

Word Word::operator+(const Word& o) const {
  Word w = *this;
  for (int i = 0; i < o.size(); ++i) w.push_back(o[i]);
  return w;
}

std::vector<int> Word::letters() const {
  std::vector<int> v(size());
  for (int i = 0; i < size(); ++i) v[i] = (*this)[i];
  return v;
}

std::string Word::to_string(bool one_based) const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string((*this)[i] + (one_based ? 1 : 0));
  }
  return s + ")";
}

Word parse_word(const std::string& text, int alphabet) {
  Word w;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" ()");
    auto e = tok.find_last_not_of(" ()");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad letter '" + tok + "' in word");
    }
    if (v < 1 || v > alphabet) throw ParseError("letter " + tok + " outside 1.." + std::to_string(alphabet));
    w.push_back(v - 1);
  }
  return w;
}

std::string tensor_to_string(const Tensor& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : t.sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + w.to_string();
  }
  return s;
}

Braiding Braiding::from_roots(const RootSystem& rs) {
  Braiding b;
  b.kind_ = Kind::Reflection;
  b.name_ = "V_W(" + rs.label() + ")";
  b.table_ = rs.reflection_table();
  b.finish();
  return b;
}

Braiding Braiding::flip(int dim) {
  Braiding b;
  b.kind_ = Kind::Flip;
  b.name_ = "flip";
  b.table_.assign(dim, std::vector<SignedRoot>(dim));
  for (int a = 0; a < dim; ++a)
    for (int c = 0; c < dim; ++c) b.table_[a][c] = {c, 1};
  b.finish();
  return b;
}

Braiding Braiding::minus_flip(int dim) {
  Braiding b = flip(dim);
  b.kind_ = Kind::MinusFlip;
  b.name_ = "minus-flip";
  for (auto& row : b.table_)
    for (auto& r : row) r.sign = -1;
  return b;
}

Braiding Braiding::custom(std::vector<std::vector<SignedRoot>> table, std::string name) {
  Braiding b;
  b.kind_ = Kind::Custom;
  b.name_ = std::move(name);
  b.table_ = std::move(table);
  b.finish();
  return b;
}

void Braiding::finish() {
  const int n = dimension();
  if (n > 255) throw BudgetExceeded("braiding dimension above 255");
  inverse_.assign(n, std::vector<SignedRoot>(n, SignedRoot{-1, 1}));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) throw InvariantViolation("braiding table must be square");
    for (int y = 0; y < n; ++y) {
      SignedRoot r = table_[a][y];
      if (r.index < 0 || r.index >= n || (r.sign != 1 && r.sign != -1))
        throw InvariantViolation("braiding entry out of range");
      if (inverse_[a][r.index].index >= 0) throw InvariantViolation("braiding row is not a permutation");
      inverse_[a][r.index] = {y, r.sign};
    }
  }
  // phi_{a>b}(phi_a(c)) = phi_a(phi_b(c)), signs included
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      SignedRoot ab = table_[a][b];
      for (int c = 0; c < n; ++c) {
        SignedRoot lhs = table_[ab.index][table_[a][c].index];
        lhs.sign *= table_[a][c].sign;
        SignedRoot rhs = table_[a][table_[b][c].index];
        rhs.sign *= table_[b][c].sign;
        if (!(lhs == rhs)) throw InvariantViolation("braiding table is not self-distributive");
      }
    }
  orbit_.assign(n, -1);
  orbit_count_ = 0;
  for (int i = 0; i < n; ++i) {
    if (orbit_[i] >= 0) continue;
    const int id = orbit_count_++;
    std::vector<int> stack{i};
    orbit_[i] = id;
    while (!stack.empty()) {
      int k = stack.back();
      stack.pop_back();
      for (int a = 0; a < n; ++a)
        for (int j : {table_[a][k].index, inverse_[a][k].index})
          if (orbit_[j] < 0) {
            orbit_[j] = id;
            stack.push_back(j);
          }
    }
  }
}

bool Grading::Key::operator<(const Key& o) const {
  if (orbit_counts != o.orbit_counts) return orbit_counts < o.orbit_counts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i].index != o.perm[i].index) return perm[i].index < o.perm[i].index;
    if (perm[i].sign != o.perm[i].sign) return perm[i].sign < o.perm[i].sign;
  }
  return false;
}

Grading::Grading(const Braiding& b) : braiding_(&b) {
  Key id;
  id.perm.resize(b.dimension());
  for (int i = 0; i < b.dimension(); ++i) id.perm[i] = {i, 1};
  id.orbit_counts.assign(b.orbit_count(), 0);
  intern(std::move(id));
}

int Grading::intern(Key k) {
  auto it = ids_.find(k);
  if (it != ids_.end()) return it->second;
  const int id = static_cast<int>(keys_.size());
  ids_.emplace(k, id);
  keys_.push_back(std::move(k));
  next_.emplace_back(braiding_->dimension(), -1);
  return id;
}

int Grading::left_multiply(int letter, int grade) {
  int& memo = next_[grade][letter];
  if (memo >= 0) return memo;
  Key k = keys_[grade];
  for (auto& r : k.perm) {
    SignedRoot s = braiding_->act(letter, r.index);
    r = {s.index, s.sign * r.sign};
  }
  ++k.orbit_counts[braiding_->orbit(letter)];
  const int id = intern(std::move(k));
  next_[grade][letter] = id;  // intern may have reallocated next_
  return id;
}

int Grading::of(const Word& w) {
  int g = identity();
  for (int i = w.size(); i-- > 0;) g = left_multiply(w[i], g);
  return g;
}

}  // namespace nichols

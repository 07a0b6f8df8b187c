#include "nichols/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

std::string CoxeterSystem::canonical_text() const {
  std::ostringstream os;
  os << rank;
  for (const auto& row : m)
    for (int v : row) os << ' ' << v;
  return os.str();
}

CoxeterSystem make_coxeter_system(std::vector<std::vector<int>> m, std::string label) {
  const int n = static_cast<int>(m.size());
  if (n < 1) throw ParseError("Coxeter matrix must have rank >= 1");
  if (n > 8) throw UnsupportedInput("rank above 8 is not supported");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw ParseError("Coxeter matrix must be square");
    if (m[i][i] != 1) throw ParseError("Coxeter matrix must have 1 on the diagonal");
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw ParseError("Coxeter matrix must be symmetric");
      if (i != j && m[i][j] <= 0) throw UnsupportedInput("infinite Coxeter orders are not supported");
      if (i != j && m[i][j] < 2) throw ParseError("off-diagonal Coxeter entries must be >= 2");
    }
  }
  CoxeterSystem cs;
  cs.rank = n;
  cs.m = std::move(m);
  cs.label = std::move(label);
  return cs;
}

namespace {

std::vector<std::vector<int>> chain(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return m;
}

}  // namespace

CoxeterSystem coxeter_from_label(std::string_view label) {
  std::string s;
  for (char ch : label)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2) throw ParseError("unknown group label '" + std::string(label) + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string rest = s.substr(1);
  if (family == 'I') {
    // I2:m or I2(m)
    std::string digits;
    if (rest.rfind("2:", 0) == 0) digits = rest.substr(2);
    else if (rest.rfind("2(", 0) == 0 && rest.back() == ')') digits = rest.substr(2, rest.size() - 3);
    else throw ParseError("dihedral label must look like I2:m");
    int mm = 0;
    try {
      std::size_t used = 0;
      mm = std::stoi(digits, &used);
      if (used != digits.size()) throw ParseError("bad dihedral order");
    } catch (const std::logic_error&) {
      throw ParseError("bad dihedral order in '" + std::string(label) + "'");
    }
    if (mm < 2) throw ParseError("dihedral order must be >= 2");
    return make_coxeter_system({{1, mm}, {mm, 1}}, "I2:" + std::to_string(mm));
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(rest, &used);
    if (used != rest.size()) throw ParseError("bad rank");
  } catch (const std::logic_error&) {
    throw ParseError("unknown group label '" + std::string(label) + "'");
  }
  const std::string name = std::string(1, family) + std::to_string(n);
  std::vector<std::vector<int>> m;
  switch (family) {
    case 'A':
      if (n < 1) break;
      m = chain(n);
      break;
    case 'B':
    case 'C':
      if (n < 2) break;
      m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 4;
      break;
    case 'D':
      if (n < 4) break;
      m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 2;
      m[n - 3][n - 1] = m[n - 1][n - 3] = 3;
      break;
    case 'F':
      if (n != 4) break;
      m = chain(4);
      m[1][2] = m[2][1] = 4;
      break;
    case 'G':
      if (n != 2) break;
      m = {{1, 6}, {6, 1}};
      break;
    case 'H':
      if (n != 3 && n != 4) break;
      m = chain(n);
      m[0][1] = m[1][0] = 5;
      break;
    case 'E':
      if (n < 6 || n > 8) break;
      m = chain(n - 1);
      for (auto& row : m) row.push_back(2);
      m.push_back(std::vector<int>(n, 2));
      m[n - 1][n - 1] = 1;
      m[2][n - 1] = m[n - 1][2] = 3;
      break;
    default:
      break;
  }
  if (m.empty()) throw ParseError("unknown group label '" + std::string(label) + "'");
  return make_coxeter_system(std::move(m), name);
}

CoxeterSystem parse_coxeter_text(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string line;
  int rank = -1;
  bool in_matrix = false;
  std::vector<std::vector<int>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    auto colon = line.find(':');
    if (!in_matrix && colon != std::string::npos) {
      std::string key = line.substr(0, colon);
      std::string value = line.substr(colon + 1);
      key.erase(key.find_last_not_of(" \t") + 1);
      if (key == "rank") {
        std::istringstream vs(value);
        if (!(vs >> rank) || rank < 1) throw ParseError("line " + std::to_string(lineno) + ": bad rank");
      } else if (key == "matrix") {
        in_matrix = true;
      } else if (key == "label") {
        std::istringstream vs(value);
        if (label.empty()) vs >> label;
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unknown field '" + key + "'");
      }
      continue;
    }
    if (!in_matrix) throw ParseError("line " + std::to_string(lineno) + ": expected 'rank:' or 'matrix:'");
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad matrix entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rank < 0) throw ParseError("missing 'rank:' field");
  if (static_cast<int>(rows.size()) != rank)
    throw ParseError("expected " + std::to_string(rank) + " matrix rows, found " + std::to_string(rows.size()));
  return make_coxeter_system(std::move(rows), std::move(label));
}

CoxeterSystem read_coxeter_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_coxeter_text(ss.str(), path.stem().string());
}

std::vector<MatsumotoEntry> matsumoto_section(int n, int max_n) {
  if (n < 1) throw UnsupportedInput("matsumoto section needs n >= 1");
  if (n > max_n) throw BudgetExceeded("matsumoto section for n = " + std::to_string(n) + " exceeds bound");
  std::vector<MatsumotoEntry> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    MatsumotoEntry e;
    e.permutation = perm;
    // Peel the smallest left descent: value i+1 sits before value i.
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[perm[k]] = k;
    for (;;) {
      int d = -1;
      for (int i = 0; i + 1 < n; ++i)
        if (pos[i + 1] < pos[i]) {
          d = i;
          break;
        }
      if (d < 0) break;
      e.word.push_back(d);
      std::swap(pos[d], pos[d + 1]);
    }
    out.push_back(std::move(e));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

int DihedralBruhatGraph::normalise(int vertex, int m) { return vertex == -m ? m : vertex; }

DihedralBruhatGraph::DihedralBruhatGraph(int m) : m_(m) {
  if (m < 2) throw UnsupportedInput("dihedral Bruhat graph needs m >= 2");
  for (int l = 0; l <= m - 1; ++l) {
    edges_.push_back({l, normalise(l + 1, m), l});
    edges_.push_back({-l, normalise(-(l + 1), m), m - 1 - l});
  }
  for (int l = 1; l <= m - 2; ++l) {
    edges_.push_back({-l, l + 1, 0});
    edges_.push_back({l, -(l + 1), m - 1});
  }
}

std::vector<std::vector<int>> DihedralBruhatGraph::paths_to(int vertex) const {
  vertex = normalise(vertex, m_);
  if (vertex == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (const auto& e : edges_) {
    if (e.target != vertex) continue;
    // Every edge strictly raises |vertex|, so the recursion terminates.
    for (auto p : paths_to(e.source)) {
      p.insert(p.begin(), e.label);
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace nichols

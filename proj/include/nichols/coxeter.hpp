#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nichols {

struct CoxeterSystem {
  int rank = 0;
  std::vector<std::vector<int>> m;  // symmetric, 1 on the diagonal, entries >= 2 off it
  std::string label;

  int order(int i, int j) const { return m[i][j]; }
  std::string canonical_text() const;  // label-independent, used for cache keys
};

// Validates symmetry, the diagonal and the off-diagonal range.  Infinite
// orders (m = 0 or negative) are rejected.
CoxeterSystem make_coxeter_system(std::vector<std::vector<int>> m, std::string label = {});

// "A3", "B2", "C3", "D4", "F4", "G2", "H3", "H4", "I2:7" (also "I2(7)").
CoxeterSystem coxeter_from_label(std::string_view label);

// Text format: "rank: N" then "matrix:" followed by N rows; '#' starts a comment.
CoxeterSystem parse_coxeter_text(std::string_view text, std::string label = {});
CoxeterSystem read_coxeter_file(const std::filesystem::path& path);

// One reduced word per permutation of {0..n-1}: the lexicographically least
// word in the adjacent transpositions s_0..s_{n-2}.
struct MatsumotoEntry {
  std::vector<int> permutation;  // one-line notation
  std::vector<int> word;
};
std::vector<MatsumotoEntry> matsumoto_section(int n, int max_n = 9);

// Bruhat graph of I2(m) with vertices v_{-(m-1)}..v_m (v_{-m} identified with
// v_m).  Edge labels are indices into gamma_0..gamma_{m-1}.
class DihedralBruhatGraph {
 public:
  struct Edge {
    int source;
    int target;
    int label;
  };

  explicit DihedralBruhatGraph(int m);
  int m() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // All paths from v_0 to the vertex, each as its label sequence read from the
  // last edge back to the first.
  std::vector<std::vector<int>> paths_to(int vertex) const;
  static int normalise(int vertex, int m);

 private:
  int m_;
  std::vector<Edge> edges_;
};

}  // namespace nichols

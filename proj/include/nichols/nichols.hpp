#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichols/braided.hpp"
#include "nichols/linalg.hpp"

namespace nichols {

using Image = std::vector<std::pair<Word, std::int64_t>>;  // sorted by word

struct BuildOptions {
  std::uint64_t budget = 1ULL << 20;  // largest admissible |V|^n
  bool parallel = true;
  int threads = 0;  // 0: OpenMP default
  std::filesystem::path cache_dir;  // empty disables the disk cache
};

// Raw data of B^n: basis words w_j (classes form a basis) and b_j = [n]! w_j.
struct ComponentData {
  int degree = 0;
  std::vector<Word> basis;
  std::vector<Image> images;
};

// B^n = T^n / ker [n]!, represented by basis words and their symmetrised images.
class GradedComponent {
 public:
  GradedComponent(ComponentData data, Grading& grading);

  int degree() const { return data_.degree; }
  std::size_t dimension() const { return data_.basis.size(); }
  const std::vector<Word>& basis() const { return data_.basis; }
  const Image& image(std::size_t j) const { return data_.images[j]; }
  const ComponentData& data() const { return data_; }
  int grade(std::size_t j) const { return grades_[j]; }

  // Normal form: c with t - sum c_i w_i in ker [n]!.
  std::vector<FieldElement> coordinates(const Tensor& t, const Field& f) const;
  std::vector<Rational> coordinates(const IntTensor& t) const;
  // (w_i | [n]! w_j) in the reversed evaluation pairing.
  std::int64_t gram(std::size_t i, std::size_t j) const;
  // sum_ij a_i b_j gram(i, j)
  FieldElement pair(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b, const Field& f) const;

 private:
  template <class C, class Out>
  std::vector<Out> solve(const std::unordered_map<std::uint32_t, C>& p, Out zero) const;
  template <class C, class Out>
  std::vector<Out> coordinates_impl(const TensorT<C>& t, Out zero) const;

  ComponentData data_;
  std::vector<int> grades_;
  // reversed image word -> (j, coefficient), so (t | b_j) is a lookup per term of t
  std::unordered_map<Word, std::vector<std::pair<std::uint32_t, std::int64_t>>, WordHash> dual_;
  struct Block {
    std::vector<std::uint32_t> rows;  // i: basis words whose reverse has this grade
    std::vector<std::uint32_t> cols;  // j: basis words of this grade
    RationalMatrix transposed;        // (G[rows, cols])^T
    // its inverse, built on the first coordinate request and shared by copies
    struct Lazy {
      std::once_flag once;
      RationalMatrix inverse;
    };
    std::shared_ptr<Lazy> lazy = std::make_shared<Lazy>();
  };
  const RationalMatrix& inverse(const Block& blk) const;
  std::vector<Block> blocks_;
};

// Kernel shared by the builder and the benchmark: b = [n]_Psi ([a] (x) b_prev).
Image symmetrise_candidate(const Braiding& b, int letter, const Image& previous);

struct BuildStats {
  std::size_t candidates = 0;
  std::size_t blocks = 0;
  int max_primes = 0;
  std::size_t exact_fallbacks = 0;
};

// Builds B^n from B^{n-1}.  With options.parallel the candidate blocks are
// processed by an OpenMP loop; the serial path is the reference.
ComponentData build_component(const Braiding& b, const GradedComponent& previous, Grading& grading,
                              const BuildOptions& options, BuildStats* stats = nullptr);

// Element of B(V): coordinates per degree in the basis of each component.
struct NicholsElement {
  std::map<int, std::vector<FieldElement>> parts;
  bool is_zero() const;
};

class NicholsAlgebra {
 public:
  NicholsAlgebra(Braiding braiding, Field field, BuildOptions options = {}, std::string cache_tag = {});
  static std::shared_ptr<NicholsAlgebra> of(const RootSystem& rs, BuildOptions options = {});
  NicholsAlgebra(const NicholsAlgebra&) = delete;
  NicholsAlgebra& operator=(const NicholsAlgebra&) = delete;

  const Braiding& braiding() const { return braiding_; }
  const Field& field() const { return field_; }
  const BuildOptions& options() const { return options_; }
  int dimension() const { return braiding_.dimension(); }

  const GradedComponent& component(int n);
  std::size_t built_degree() const { return components_.size(); }
  // Dimensions up to max_degree, stopping after two consecutive zeros.
  std::vector<std::size_t> hilbert_series(int max_degree);
  bool fits_budget(int n) const;

  NicholsElement element(const Tensor& t);  // t may be any single degree
  NicholsElement element(const std::vector<Tensor>& pieces);
  Tensor representative(const NicholsElement& x, int degree) const;
  NicholsElement add(const NicholsElement& a, const NicholsElement& b) const;
  NicholsElement scale(const NicholsElement& a, const FieldElement& s) const;
  NicholsElement multiply(const NicholsElement& a, const NicholsElement& b);
  NicholsElement derivative(const NicholsElement& a, int letter);
  FieldElement pairing(const NicholsElement& a, const NicholsElement& b);
  bool is_constant(const NicholsElement& a);
  bool equal(const NicholsElement& a, const NicholsElement& b) const;

  std::string cache_key() const;

 private:
  Braiding braiding_;
  Field field_;
  BuildOptions options_;
  std::string cache_tag_;
  Grading grading_;
  std::vector<std::unique_ptr<GradedComponent>> components_;
};

// Pairing <phi, x> computed by symmetrising x, and by derivatives of phi.
FieldElement pairing_by_symmetriser(const Braiding& b, const Tensor& phi, const Tensor& x);
FieldElement pairing_by_derivatives(const Braiding& b, const Tensor& phi, const Tensor& x);
// x in ker [n]!, decided by symmetrising (no components needed).
bool in_symmetriser_kernel(const Braiding& b, const Tensor& x);

// Hilbert series of the quadratic cover T(V)/(ker(1 + Psi)), up to max_degree.
std::vector<std::size_t> quadratic_hilbert_series(const Braiding& b, int max_degree,
                                                  std::uint64_t budget = 1ULL << 20);

// Disk cache of components, keyed by braiding hash and degree.
namespace cache {
inline constexpr int kFormatVersion = 1;
std::filesystem::path default_dir();  // $NICHOLS_CACHE_DIR or ./.nichols-cache
std::filesystem::path path_for(const std::filesystem::path& dir, const std::string& key, int degree);
std::optional<ComponentData> load(const std::filesystem::path& dir, const std::string& key, int degree);
void store(const std::filesystem::path& dir, const std::string& key, const ComponentData& data);
std::vector<std::filesystem::path> list(const std::filesystem::path& dir);
std::size_t clear(const std::filesystem::path& dir);
}  // namespace cache

std::string braiding_hash(const Braiding& b);

}  // namespace nichols

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "nichols/nichols.hpp"

namespace nichols {

std::string braiding_hash(const Braiding& b) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(cache::kFormatVersion);
  mix(static_cast<std::uint64_t>(b.dimension()));
  for (int a = 0; a < b.dimension(); ++a)
    for (int c = 0; c < b.dimension(); ++c) {
      SignedRoot r = b.act(a, c);
      mix(static_cast<std::uint64_t>(r.index) * 2 + (r.sign < 0));
    }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace cache {

namespace fs = std::filesystem;

fs::path default_dir() {
  if (const char* env = std::getenv("NICHOLS_CACHE_DIR"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "nichols";
  return ".nichols-cache";
}

fs::path path_for(const fs::path& dir, const std::string& key, int degree) {
  return dir / (key + "-v" + std::to_string(kFormatVersion) + "-deg" + std::to_string(degree) + ".txt");
}

namespace {

std::string word_token(const Word& w) {
  if (w.empty()) return "-";
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(w[i]);
  }
  return s;
}

bool parse_word_token(const std::string& tok, Word& w) {
  w = Word();
  if (tok == "-") return true;
  std::istringstream in(tok);
  std::string part;
  while (std::getline(in, part, '.')) {
    char* end = nullptr;
    long v = std::strtol(part.c_str(), &end, 10);
    if (*end != '\0' || v < 0 || v > 255 || w.size() >= kMaxDegree) return false;
    w.push_back(static_cast<int>(v));
  }
  return true;
}

}  // namespace

std::optional<ComponentData> load(const fs::path& dir, const std::string& key, int degree) {
  std::ifstream in(path_for(dir, key, degree));
  if (!in) return std::nullopt;
  std::string magic, tag;
  int version = 0;
  if (!(in >> magic >> version) || magic != "nichols-component" || version != kFormatVersion) return std::nullopt;
  std::string file_key;
  int file_degree = -1;
  std::size_t dim = 0, triplets = 0;
  if (!(in >> tag >> file_key) || tag != "key" || file_key != key) return std::nullopt;
  if (!(in >> tag >> file_degree) || tag != "degree" || file_degree != degree) return std::nullopt;
  if (!(in >> tag >> dim) || tag != "dimension") return std::nullopt;
  ComponentData data;
  data.degree = degree;
  if (!(in >> tag) || tag != "basis") return std::nullopt;
  for (std::size_t i = 0; i < dim; ++i) {
    std::string tok;
    Word w;
    if (!(in >> tok) || !parse_word_token(tok, w) || w.size() != degree) return std::nullopt;
    data.basis.push_back(w);
  }
  if (!(in >> tag >> triplets) || tag != "triplets") return std::nullopt;
  data.images.assign(dim, {});
  for (std::size_t t = 0; t < triplets; ++t) {
    std::size_t row;
    std::string tok;
    std::string num, den;
    Word w;
    if (!(in >> row >> tok >> num >> den) || row >= dim || !parse_word_token(tok, w) || den != "1")
      return std::nullopt;
    char* end = nullptr;
    long long v = std::strtoll(num.c_str(), &end, 10);
    if (*end != '\0') return std::nullopt;
    data.images[row].emplace_back(w, static_cast<std::int64_t>(v));
  }
  if (!(in >> tag) || tag != "end") return std::nullopt;
  for (auto& img : data.images)
    std::sort(img.begin(), img.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return data;
}

void store(const fs::path& dir, const std::string& key, const ComponentData& data) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;  // the cache is an optimisation; failures are not fatal
  const fs::path target = path_for(dir, key, data.degree);
  std::ostringstream tmpname;
  tmpname << target.string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  {
    std::ofstream out(tmpname.str());
    if (!out) return;
    out << "nichols-component " << kFormatVersion << "\n";
    out << "key " << key << "\n";
    out << "degree " << data.degree << "\n";
    out << "dimension " << data.basis.size() << "\n";
    out << "basis\n";
    for (const auto& w : data.basis) out << word_token(w) << "\n";
    std::size_t total = 0;
    for (const auto& img : data.images) total += img.size();
    out << "triplets " << total << "\n";
    for (std::size_t j = 0; j < data.images.size(); ++j)
      for (const auto& [w, v] : data.images[j]) out << j << ' ' << word_token(w) << ' ' << v << " 1\n";
    out << "end\n";
    if (!out) {
      fs::remove(tmpname.str(), ec);
      return;
    }
  }
  fs::rename(tmpname.str(), target, ec);  // atomic publish; concurrent writers race harmlessly
  if (ec) fs::remove(tmpname.str(), ec);
}

std::vector<fs::path> list(const fs::path& dir) {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.path().extension() == ".txt" && e.path().filename().string().find("-deg") != std::string::npos)
      out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t clear(const fs::path& dir) {
  std::size_t n = 0;
  std::error_code ec;
  for (const auto& p : list(dir))
    if (fs::remove(p, ec)) ++n;
  return n;
}

}  // namespace cache
}  // namespace nichols

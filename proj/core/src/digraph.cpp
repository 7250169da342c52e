#include "cantor/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "cantor/error.hpp"

namespace cantor {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

void VertexSet::insert(Vertex v) {
  if (v < 1 || v > universe_) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1," +
                                                 std::to_string(universe_) + "]");
  }
  words_[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= 1 && v <= universe_) words_[(v - 1) >> 6] &= ~(std::uint64_t{1} << ((v - 1) & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~theirs) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::size_t VertexSet::hash() const noexcept {
  std::size_t h = universe_;
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Digraph::Digraph(std::size_t n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidArgument, "a digraph needs at least one vertex");
  std::sort(arrows_.begin(), arrows_.end());
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
  in_.assign(n_, VertexSet(n_));
  for (const auto& [u, v] : arrows_) {
    if (!contains(u) || !contains(v)) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "arrow (" + std::to_string(u) + "," + std::to_string(v) +
                      ") leaves the vertex set [1," + std::to_string(n_) + "]");
    }
    in_[v - 1].insert(u);
  }
}

Digraph Digraph::from_code(std::size_t n, std::uint64_t code) {
  if (n == 0 || n * n > 64) {
    throw Error(ErrorCode::InvalidArgument, "from_code supports 1 <= n <= 8");
  }
  std::vector<Arrow> arrows;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = 1; v <= n; ++v) {
      if ((code >> ((u - 1) * n + (v - 1))) & 1u) {
        arrows.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Digraph(n, std::move(arrows));
}

const VertexSet& Digraph::in_set(Vertex u) const {
  if (!contains(u)) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(u) + " outside [1," + std::to_string(n_) + "]");
  }
  return in_[u - 1];
}

namespace {

bool read_number(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Digraph load_digraph(std::string_view text, std::vector<std::string>* warnings) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Arrow> arrows;
  std::set<Arrow> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!have_header) {
      std::uint64_t value = 0;
      if (words.size() != 2 || words[0] != "vertices" || !read_number(words[1], value) ||
          value == 0) {
        throw Error(ErrorCode::BadHeader,
                    "line " + std::to_string(line_no) + ": expected 'vertices <n>' with n >= 1",
                    line_no);
      }
      n = static_cast<std::size_t>(value);
      have_header = true;
      continue;
    }

    std::uint64_t u = 0, v = 0;
    if (words.size() != 2 || !read_number(words[0], u) || !read_number(words[1], v)) {
      throw Error(ErrorCode::BadHeader,
                  "line " + std::to_string(line_no) + ": expected an arrow '<u> <v>'", line_no);
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "line " + std::to_string(line_no) + ": arrow " + std::to_string(u) + " " +
                      std::to_string(v) + " leaves [1," + std::to_string(n) + "]",
                  line_no);
    }
    const Arrow a{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(a).second) {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line_no) + ": duplicate arrow " +
                            std::to_string(u) + " " + std::to_string(v) + " ignored");
      }
      continue;
    }
    arrows.push_back(a);
  }
  if (!have_header) throw Error(ErrorCode::BadHeader, "missing 'vertices <n>' header", 1);
  return Digraph(n, std::move(arrows));
}

std::string write_digraph(const Digraph& graph) {
  std::string out = "vertices " + std::to_string(graph.order()) + "\n";
  for (const auto& [u, v] : graph.arrows()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace cantor

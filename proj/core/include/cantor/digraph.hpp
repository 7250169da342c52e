#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cantor {

/// Vertices are 1..n.
using Vertex = std::uint32_t;
using Arrow = std::pair<Vertex, Vertex>;

/// Fixed-universe bitset over the vertices 1..n.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const noexcept {
    return v >= 1 && v <= universe_ && ((words_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1u);
  }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool subset_of(const VertexSet& other) const noexcept;
  std::vector<Vertex> to_vector() const;

  /// Calls f(v) for each member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b) + 1));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

/// Finite digraph <[n], E>. An arrow (u, v) means u E v: u is a D-element
/// of v.
class Digraph {
 public:
  /// Throws Error(VertexOutOfRange) for endpoints outside [1, n] and
  /// Error(InvalidArgument) for n == 0. Duplicate arrows collapse.
  Digraph(std::size_t n, std::vector<Arrow> arrows);

  /// Digraph whose arrow (u, v) is present iff bit (u-1)*n + (v-1) of
  /// `code` is set; n*n must not exceed 64.
  static Digraph from_code(std::size_t n, std::uint64_t code);

  std::size_t order() const noexcept { return n_; }
  /// Sorted, duplicate free.
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  bool has_arrow(Vertex u, Vertex v) const noexcept { return in_[v - 1].contains(u); }
  /// N(u), the in-neighbors of u. Throws Error(VertexOutOfRange).
  const VertexSet& in_set(Vertex u) const;
  bool contains(Vertex u) const noexcept { return u >= 1 && u <= n_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t n_;
  std::vector<Arrow> arrows_;
  std::vector<VertexSet> in_;
};

/// Reads `vertices <n>` followed by one `<u> <v>` arrow per line; `#` starts
/// a comment and blank lines are skipped. Duplicate arrows are dropped with a
/// message appended to `warnings` when given. Errors: BadHeader,
/// VertexOutOfRange (position = line number).
Digraph load_digraph(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string write_digraph(const Digraph& graph);

}  // namespace cantor

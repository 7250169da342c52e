#pragma once

// Index-exact word surgery: replacing a segment, tracking a second segment
// through a replacement, symbol-for-symbol renaming and simultaneous
// replacement of disjoint segments. Indices are 1-based and intervals are
// inclusive, [l, m] with 1 <= l <= m <= |u|.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cantor/error.hpp"

namespace cantor {

struct Interval {
  std::size_t l = 1;
  std::size_t m = 1;

  std::size_t size() const noexcept { return m - l + 1; }
  bool disjoint(const Interval& other) const noexcept { return m < other.l || other.m < l; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

inline void check_nonempty(std::size_t size, const char* what) {
  if (size == 0) throw Error(ErrorCode::EmptyWord, std::string(what) + " must be nonempty");
}

inline void check_interval(const Interval& iv, std::size_t word_size) {
  if (iv.l < 1 || iv.l > iv.m || iv.m > word_size) {
    throw Error(ErrorCode::IndexOutOfRange,
                "interval [" + std::to_string(iv.l) + "," + std::to_string(iv.m) +
                    "] is not inside a word of length " + std::to_string(word_size));
  }
}

}  // namespace detail

/// u with its segment [l, m] replaced by v; the result has length
/// |u| - (m - l + 1) + |v|.
template <class T>
std::vector<T> rep(std::span<const T> u, std::span<const T> v, std::size_t l, std::size_t m) {
  detail::check_nonempty(u.size(), "rep target");
  detail::check_nonempty(v.size(), "rep replacement");
  detail::check_interval({l, m}, u.size());
  std::vector<T> out;
  out.reserve(u.size() - (m - l + 1) + v.size());
  out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(l - 1));
  out.insert(out.end(), v.begin(), v.end());
  out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(m), u.end());
  return out;
}

template <class T>
std::vector<T> rep(const std::vector<T>& u, const std::vector<T>& v, std::size_t l, std::size_t m) {
  return rep(std::span<const T>(u), std::span<const T>(v), l, m);
}

template <class T>
struct TrackedReplacement {
  std::vector<T> word;
  Interval tracked;
};

/// rep(u, v, l, m) together with the image of the disjoint interval
/// [l2, m2]: unchanged if it lies left of [l, m], otherwise shifted by
/// |v| - (m - l + 1).
template <class T>
TrackedReplacement<T> rep0(std::span<const T> u, std::span<const T> v, std::size_t l,
                           std::size_t m, std::size_t l2, std::size_t m2) {
  detail::check_nonempty(u.size(), "rep0 target");
  detail::check_interval({l, m}, u.size());
  detail::check_interval({l2, m2}, u.size());
  if (!Interval{l, m}.disjoint(Interval{l2, m2})) {
    throw Error(ErrorCode::OverlappingIntervals,
                "rep0 intervals [" + std::to_string(l) + "," + std::to_string(m) + "] and [" +
                    std::to_string(l2) + "," + std::to_string(m2) + "] overlap");
  }
  TrackedReplacement<T> out{rep(u, v, l, m), Interval{l2, m2}};
  if (l2 > m) {
    // The shift may be negative; compute in signed space.
    const auto shift = static_cast<std::ptrdiff_t>(v.size()) - static_cast<std::ptrdiff_t>(m - l + 1);
    out.tracked.l = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(l2) + shift);
    out.tracked.m = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(m2) + shift);
  }
  return out;
}

template <class T>
TrackedReplacement<T> rep0(const std::vector<T>& u, const std::vector<T>& v, std::size_t l,
                           std::size_t m, std::size_t l2, std::size_t m2) {
  return rep0(std::span<const T>(u), std::span<const T>(v), l, m, l2, m2);
}

/// Simultaneous renaming a_i -> b_i of every occurrence; length preserving.
/// The sources a_i must be pairwise distinct.
template <class T>
std::vector<T> sub1(std::span<const T> u, const std::vector<std::pair<T, T>>& renaming) {
  detail::check_nonempty(u.size(), "sub1 target");
  for (std::size_t i = 0; i < renaming.size(); ++i) {
    for (std::size_t j = i + 1; j < renaming.size(); ++j) {
      if (renaming[i].first == renaming[j].first) {
        throw Error(ErrorCode::DuplicateSource, "sub1 renames the same symbol twice");
      }
    }
  }
  std::vector<T> out(u.begin(), u.end());
  for (T& s : out) {
    for (const auto& [from, to] : renaming) {
      if (s == from) {
        s = to;
        break;
      }
    }
  }
  return out;
}

template <class T>
std::vector<T> sub1(const std::vector<T>& u, const std::vector<std::pair<T, T>>& renaming) {
  return sub1(std::span<const T>(u), renaming);
}

template <class T>
struct Replacement {
  std::vector<T> word;
  Interval at;
};

/// Replaces every listed interval of u by its word. Patching runs from the
/// rightmost interval leftwards so earlier indices stay valid; the result
/// does not depend on the order of `replacements`.
template <class T>
std::vector<T> sub2(std::span<const T> u, std::vector<Replacement<T>> replacements) {
  detail::check_nonempty(u.size(), "sub2 target");
  for (const auto& r : replacements) {
    detail::check_nonempty(r.word.size(), "sub2 replacement");
    detail::check_interval(r.at, u.size());
  }
  std::sort(replacements.begin(), replacements.end(),
            [](const Replacement<T>& a, const Replacement<T>& b) { return a.at.l > b.at.l; });
  for (std::size_t i = 1; i < replacements.size(); ++i) {
    if (!replacements[i].at.disjoint(replacements[i - 1].at)) {
      throw Error(ErrorCode::OverlappingIntervals, "sub2 intervals overlap");
    }
  }
  std::vector<T> out(u.begin(), u.end());
  for (const auto& r : replacements) {
    out = rep(std::span<const T>(out), std::span<const T>(r.word), r.at.l, r.at.m);
  }
  return out;
}

template <class T>
std::vector<T> sub2(const std::vector<T>& u, std::vector<Replacement<T>> replacements) {
  return sub2(std::span<const T>(u), std::move(replacements));
}

}  // namespace cantor

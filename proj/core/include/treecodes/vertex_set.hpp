#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "treecodes/errors.hpp"

namespace treecodes {

/// Fixed-width set of vertex indices backed by machine words.
///
/// A set carries the size of its universe (the graph order n); members are
/// indices 0..n-1. Sets over at most 64 vertices fit in one word, which the
/// exact solvers use as their fast path; the multi-word representation covers
/// everything the generators can produce (up to kMaxVertices).
class VertexSet {
 public:
  static constexpr int kMaxVertices = 256;
  static constexpr int kWords = kMaxVertices / 64;

  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe) {
    if (universe < 0 || universe > kMaxVertices)
      throw DomainError("VertexSet universe out of range: " + std::to_string(universe));
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
  }

  /// Builds a set over a universe of at most 64 vertices from a raw bitmask.
  static VertexSet from_word(int universe, std::uint64_t bits) {
    assert(universe <= 64);
    VertexSet s(universe);
    s.w_[0] = universe == 64 ? bits : (bits & ((std::uint64_t{1} << universe) - 1));
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  void add(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void remove(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int size() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  VertexSet operator|(const VertexSet& o) const {
    assert(n_ == o.n_);
    VertexSet r(n_);
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  VertexSet operator&(const VertexSet& o) const {
    assert(n_ == o.n_);
    VertexSet r(n_);
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  VertexSet operator^(const VertexSet& o) const {
    assert(n_ == o.n_);
    VertexSet r(n_);
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] ^ o.w_[i];
    return r;
  }

  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator^=(const VertexSet& o) { return *this = *this ^ o; }

  /// Set difference.
  VertexSet operator-(const VertexSet& o) const {
    assert(n_ == o.n_);
    VertexSet r(n_);
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  /// Complement within the universe.
  VertexSet complement() const { return full(n_) - *this; }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  /// Numeric-value order: the set is read as an n-bit integer with vertex v
  /// contributing 2^v. Gives a stable total order for witness tie-breaking.
  bool operator<(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (int i = kWords - 1; i >= 0; --i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  /// Raw bitmask; only meaningful when the universe fits one word.
  std::uint64_t word() const {
    assert(n_ <= 64);
    return w_[0];
  }

  /// Smallest member, or -1 if empty.
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  /// Applies f to every member in ascending order.
  template <class F>
  void for_each(F f) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int v = i * 64 + std::countr_zero(w);
        f(v);
        w &= w - 1;
      }
    }
  }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first_item = true;
    for_each([&](int v) {
      if (!first_item) out += ',';
      out += std::to_string(v);
      first_item = false;
    });
    out += '}';
    return out;
  }

 private:
  int n_ = 0;
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace treecodes

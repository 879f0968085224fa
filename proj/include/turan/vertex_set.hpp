#ifndef TURAN_VERTEX_SET_HPP
#define TURAN_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace turan {

using Vertex = int;

/// Fixed-universe bitset over vertices 0..size-1.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

  static int word_count(int universe) { return (universe + kBits - 1) / kBits; }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(Vertex v) const { return (words_[v / kBits] >> (v % kBits)) & 1U; }
  void set(Vertex v) { words_[v / kBits] |= Word{1} << (v % kBits); }
  void reset(Vertex v) { words_[v / kBits] &= ~(Word{1} << (v % kBits)); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Smallest member, or -1.
  Vertex first() const { return next(0); }

  /// Smallest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(from) / kBits;
    Word w = words_[i] & (~Word{0} << (from % kBits));
    while (true) {
      if (w) return static_cast<Vertex>(i * kBits + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  /// Removes every member <= v.
  void erase_up_to(Vertex v) {
    if (v < 0) return;
    const std::size_t full_words = static_cast<std::size_t>(v + 1) / kBits;
    for (std::size_t i = 0; i < full_words && i < words_.size(); ++i) words_[i] = 0;
    const int rem = (v + 1) % kBits;
    if (rem && full_words < words_.size()) words_[full_words] &= ~Word{0} << rem;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * kBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  void trim() {
    if (universe_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace turan

#endif  // TURAN_VERTEX_SET_HPP

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gpow {

// Hard cap on the universe size; a word-multiple so the last word is the
// only one that can be partially used.
inline constexpr int kMaxVertices = 1024;

// Fixed-universe set of vertex indices backed by 64-bit words.
// Only bits 0..n-1 may ever be set; all operations preserve that.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("VertexSet: universe size out of range");
    n_ = n;
    words_.assign((n + 63) / 64, 0);
  }

  static VertexSet singleton(int n, int v) {
    VertexSet s(n);
    s.set(v);
    return s;
  }

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    check_index(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(int v) {
    check_index(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    check_index(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  // Lowest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  // Complement within the universe.
  VertexSet complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.mask_tail();
    return r;
  }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Visit members in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int v = int(i * 64) + std::countr_zero(w);
        f(v);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  void check_index(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: index out of range");
  }
  void check_universe(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
  }
  void mask_tail() {
    int tail = n_ & 63;
    if (tail != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gpow

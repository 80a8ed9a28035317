#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fcut {

// Subset of a fixed vertex universe {0..n-1}, packed 64 vertices per word.
// Word 0 holds vertices 0..63, so comparing word arrays from the highest
// word down orders sets by the integer value of their characteristic vector.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {
    assert(universe >= 0);
  }

  VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
    for (int v : vs) set(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int i = 0; i < static_cast<int>(s.w_.size()); ++i) s.w_[i] = ~0ULL;
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(0 <= v && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    assert(0 <= v && v < n_);
    w_[v >> 6] |= 1ULL << (v & 63);
  }

  void reset(int v) {
    assert(0 <= v && v < n_);
    w_[v >> 6] &= ~(1ULL << (v & 63));
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const { return next(-1); }

  // Smallest member greater than v, or -1 when none.
  int next(int v) const {
    int start = v + 1;
    if (start >= n_) return -1;
    int wi = start >> 6;
    uint64_t w = w_[wi] >> (start & 63);
    if (w) return start + std::countr_zero(w);
    for (++wi; wi < static_cast<int>(w_.size()); ++wi)
      if (w_[wi]) return (wi << 6) + std::countr_zero(w_[wi]);
    return -1;
  }

  bool operator==(const VertexSet& o) const = default;

  // Orders sets of the same universe by characteristic-vector value; used to
  // break ties among equal-size witness candidates.
  static bool value_less(const VertexSet& a, const VertexSet& b) {
    assert(a.n_ == b.n_);
    for (int i = static_cast<int>(a.w_.size()) - 1; i >= 0; --i)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int v = first(); v >= 0; v = next(v)) {
      if (sep) s += ",";
      s += std::to_string(v);
      sep = true;
    }
    s += "}";
    return s;
  }

  uint64_t word(int i) const { return w_[i]; }

  // Only meaningful for universes of at most 64 vertices.
  uint64_t as_mask() const {
    assert(n_ <= 64);
    return w_.empty() ? 0 : w_[0];
  }

  static VertexSet from_mask(int universe, uint64_t mask) {
    assert(universe <= 64);
    VertexSet s(universe);
    if (!s.w_.empty()) s.w_[0] = mask;
    s.trim();
    return s;
  }

 private:
  static int word_count(int n) { return (n + 63) / 64; }

  void trim() {
    if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace fcut

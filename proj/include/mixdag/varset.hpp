#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mixdag {

using VarId = int;

// Set of variable ids in [0, 64), stored as a bitmask. Everything in this
// library operates on small graphs; the joint-table cell budget binds long
// before this limit does.
class VarSet {
 public:
  static constexpr int kMaxVars = 64;

  VarSet() = default;
  VarSet(std::initializer_list<VarId> vars) {
    for (VarId v : vars) insert(v);
  }

  // {0, 1, ..., count-1}
  static VarSet range(int count) {
    assert(count >= 0 && count <= kMaxVars);
    VarSet s;
    if (count > 0)
      s.bits_ = (count == kMaxVars) ? ~uint64_t{0}
                                    : ((uint64_t{1} << count) - 1);
    return s;
  }

  void insert(VarId v) {
    assert(v >= 0 && v < kMaxVars);
    bits_ |= uint64_t{1} << v;
  }
  void erase(VarId v) {
    assert(v >= 0 && v < kMaxVars);
    bits_ &= ~(uint64_t{1} << v);
  }
  bool contains(VarId v) const {
    return v >= 0 && v < kMaxVars && ((bits_ >> v) & 1) != 0;
  }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  bool intersects(const VarSet& o) const { return (bits_ & o.bits_) != 0; }
  bool subset_of(const VarSet& o) const { return (bits_ & ~o.bits_) == 0; }

  VarSet operator|(const VarSet& o) const { return VarSet(bits_ | o.bits_); }
  VarSet operator&(const VarSet& o) const { return VarSet(bits_ & o.bits_); }
  VarSet operator-(const VarSet& o) const { return VarSet(bits_ & ~o.bits_); }
  VarSet& operator|=(const VarSet& o) {
    bits_ |= o.bits_;
    return *this;
  }

  bool operator==(const VarSet&) const = default;

  std::vector<VarId> to_vector() const {
    std::vector<VarId> out;
    out.reserve(static_cast<size_t>(size()));
    for (VarId v : *this) out.push_back(v);
    return out;
  }

  // iterates set members in ascending order
  class iterator {
   public:
    explicit iterator(uint64_t bits) : bits_(bits) {}
    VarId operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator==(const iterator&) const = default;

   private:
    uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  uint64_t bits() const { return bits_; }

 private:
  explicit VarSet(uint64_t bits) : bits_(bits) {}
  uint64_t bits_ = 0;
};

}  // namespace mixdag

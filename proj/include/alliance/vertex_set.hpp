#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace alliance {

using Vertex = std::uint32_t;

/// A subset of {0, ..., 63} stored as a bitmask. Ordering is by the numeric
/// value of the mask, which is the tie-break order used for witnesses.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  /// {0, ..., n-1}
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Lowest member. Undefined on the empty set.
  constexpr Vertex first() const { return static_cast<Vertex>(std::countr_zero(bits_)); }
  /// Highest member. Undefined on the empty set.
  constexpr Vertex last() const { return static_cast<Vertex>(63 - std::countl_zero(bits_)); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr std::strong_ordering operator<=>(const VertexSet& o) const { return bits_ <=> o.bits_; }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
      if (!first_member) out += ',';
      out += std::to_string(v);
      first_member = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << s.to_string(); }

}  // namespace alliance

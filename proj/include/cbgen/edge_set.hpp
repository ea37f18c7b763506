#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cbgen {

// Undirected edge with endpoints in canonical order (a <= b). a == b marks a
// loop; loops never enter an EdgeSet, they only occur transiently while
// pairing. Vertex ids must stay below 2^32 - 2 so the set's sentinels are
// unreachable keys.
struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

inline Edge make_edge(std::uint32_t u, std::uint32_t v) {
  return u <= v ? Edge{u, v} : Edge{v, u};
}

inline bool operator==(Edge lhs, Edge rhs) { return lhs.a == rhs.a && lhs.b == rhs.b; }
inline bool operator!=(Edge lhs, Edge rhs) { return !(lhs == rhs); }
inline bool is_loop(Edge e) { return e.a == e.b; }

inline std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(e.a) << 32) | e.b;
}

// Edge list plus where each edge came from: 0 for the background graph,
// l + 1 for community l.
struct EdgeList {
  std::vector<Edge> edges;
  std::vector<std::uint32_t> provenance;

  std::size_t size() const { return edges.size(); }
  void append(Edge e, std::uint32_t origin) {
    edges.push_back(e);
    provenance.push_back(origin);
  }
};

// Open-addressing hash set of edge keys with linear probing and tombstone
// deletes. One uint64 per slot at 50-75% load; rebuilt when live + dead
// entries pass 3/4 of capacity.
class EdgeSet {
 public:
  explicit EdgeSet(std::size_t expected = 0) { rebuild(capacity_for(expected)); }

  bool contains(std::uint64_t key) const {
    std::size_t i = index_of(key);
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

  // False if the key was already present.
  bool insert(std::uint64_t key) {
    if ((size_ + dead_ + 1) * 4 > slots_.size() * 3) rebuild(slots_.size() * 2);
    std::size_t i = index_of(key);
    std::size_t target = SIZE_MAX;
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return false;
      if (slots_[i] == kDead && target == SIZE_MAX) target = i;
      i = (i + 1) & mask_;
    }
    if (target == SIZE_MAX) {
      target = i;
    } else {
      --dead_;
    }
    slots_[target] = key;
    ++size_;
    return true;
  }

  // False if the key was absent.
  bool erase(std::uint64_t key) {
    std::size_t i = index_of(key);
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) {
        slots_[i] = kDead;
        --size_;
        ++dead_;
        return true;
      }
      i = (i + 1) & mask_;
    }
    return false;
  }

  std::size_t size() const { return size_; }

  void reserve(std::size_t expected) {
    const std::size_t want = capacity_for(expected);
    if (want > slots_.size()) rebuild(want);
  }

 private:
  // Both sentinels decode to edges on vertices >= 2^32 - 2, unreachable for
  // any graph this library can hold.
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  static constexpr std::uint64_t kDead = ~std::uint64_t{0} - 1;

  static std::size_t capacity_for(std::size_t expected) {
    std::size_t cap = 16;
    while (cap * 3 < expected * 4 + 4) cap *= 2;
    return cap;
  }

  static std::uint64_t mix(std::uint64_t key) {
    key ^= key >> 33;
    key *= 0xFF51AFD7ED558CCDULL;
    key ^= key >> 33;
    key *= 0xC4CEB9FE1A85EC53ULL;
    key ^= key >> 33;
    return key;
  }

  std::size_t index_of(std::uint64_t key) const { return mix(key) & mask_; }

  void rebuild(std::size_t capacity) {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(capacity, kEmpty);
    mask_ = capacity - 1;
    size_ = 0;
    dead_ = 0;
    for (std::uint64_t key : old) {
      if (key == kEmpty || key == kDead) continue;
      std::size_t i = index_of(key);
      while (slots_[i] != kEmpty) i = (i + 1) & mask_;
      slots_[i] = key;
      ++size_;
    }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
  std::size_t dead_ = 0;
};

}  // namespace cbgen

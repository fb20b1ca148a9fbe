#pragma once

// Bounded, ordered streams over the lattice.
//
// Each stream is a single-consumer iterator: call next() until it returns
// nullopt, or use it in a range-for. Streams emit triples in ascending
// hypotenuse order; the full-lattice streams break ties by ascending a.

#include <cstddef>
#include <iterator>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "core.hpp"

namespace triple_lattice {

enum class SeriesKind { odd, even };

struct SeriesId {
  SeriesKind kind;
  u64 index;

  SeriesId(SeriesKind kind_, u64 index_) : kind(kind_), index(index_) {
    if (index == 0) throw error(errc::invalid_argument, "series index must be >= 1");
  }
};

/// Inclusive hypotenuse bound. Bounds below 5 are accepted and produce
/// empty streams; use is_valid() where a non-trivial bound is required.
struct EnumBound {
  static constexpr u64 smallest_hypotenuse = 5;

  u64 c_max;

  explicit EnumBound(u64 c_max_) : c_max(c_max_) {}

  static EnumBound unbounded() { return EnumBound(std::numeric_limits<u64>::max()); }

  bool is_valid() const noexcept { return c_max >= smallest_hypotenuse; }
  bool admits(const Triple& t) const noexcept { return t.c() <= c_max; }
};

/// CRTP base giving a stream with `std::optional<Triple> next()` an input
/// iterator interface.
template <class Derived>
class triple_stream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Triple;
    using difference_type = std::ptrdiff_t;
    using pointer = const Triple*;
    using reference = const Triple&;

    iterator() = default;
    explicit iterator(Derived* stream) : stream_(stream) { advance(); }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    void advance() { current_ = stream_->next(); }

    Derived* stream_ = nullptr;
    std::optional<Triple> current_;
  };

  iterator begin() { return iterator(static_cast<Derived*>(this)); }
  std::default_sentinel_t end() const { return {}; }
};

template <class Stream>
std::vector<Triple> collect(Stream&& stream) {
  std::vector<Triple> out;
  while (auto t = stream.next()) out.push_back(*t);
  return out;
}

// ---------------------------------------------------------------------------
// Lines through the lattice

/// Walks lattice points (mu0 + k*mu_step, n0 + k*n_step), k = 0, 1, ...
/// c grows strictly along any such line with a non-zero step, so the walk
/// stops at the first point beyond the bound.
class lattice_line : public triple_stream<lattice_line> {
 public:
  lattice_line(ExtendedIndex start, u64 mu_step, u64 n_step, EnumBound bound)
      : mu_(start.mu), n_(start.n), mu_step_(mu_step), n_step_(n_step), bound_(bound) {}

  std::optional<Triple> next() {
    if (done_) return std::nullopt;
    const Triple t = extended_triple(ExtendedIndex(mu_, n_));
    if (!bound_.admits(t)) {
      done_ = true;
      return std::nullopt;
    }
    mu_ = arith::add(mu_, mu_step_);
    n_ = arith::add(n_, n_step_);
    return t;
  }

 private:
  u64 mu_;
  u64 n_;
  u64 mu_step_;
  u64 n_step_;
  EnumBound bound_;
  bool done_ = false;
};

/// odd(m): class-C triples with c - b = (2m-1)^2, i.e. the column m.
inline lattice_line odd_series(u64 m, EnumBound bound) {
  return lattice_line(ExtendedIndex(LatticeIndex(m, 1)), 0, 1, bound);
}

/// even(n): class-C triples with c - a = 2n^2, i.e. the row n.
inline lattice_line even_series(u64 n, EnumBound bound) {
  return lattice_line(ExtendedIndex(LatticeIndex(1, n)), 2, 0, bound);
}

inline lattice_line series(const SeriesId& id, EnumBound bound) {
  return id.kind == SeriesKind::odd ? odd_series(id.index, bound) : even_series(id.index, bound);
}

/// Points on n = 2m - 1; element k is (2k-1)^2 * (3,4,5).
inline lattice_line diagonal_multiples(EnumBound bound) {
  return lattice_line(ExtendedIndex(1, 1), 2, 2, bound);
}

/// (2n+1, 2n^2+2n, 2n^2+2n+1), the column m = 1.
inline Triple pythagorean_family(u64 n) { return triple_from_lattice(LatticeIndex(1, n)); }

/// (4m^2-1, 4m, 4m^2+1), the row n = 1.
inline Triple platonic_family(u64 m) { return triple_from_lattice(LatticeIndex(m, 1)); }

// ---------------------------------------------------------------------------
// Full-lattice merge

/// K-way merge of the columns mu = 1, 1+step, 1+2*step, ... of the extended
/// lattice. Columns are opened lazily: column mu starts at n = 1 with
/// c = (mu+1)^2 + 1, which is increasing in mu, so a column only needs to be
/// opened once the smallest pending element reaches its head. This keeps
/// the merge valid for unbounded streams too.
class column_merge : public triple_stream<column_merge> {
 public:
  column_merge(u64 mu_step, EnumBound bound) : mu_step_(mu_step), bound_(bound) {}

  std::optional<Triple> next() {
    open_columns();
    if (heap_.empty()) return std::nullopt;
    const cursor top = heap_.top();
    heap_.pop();
    push(top.mu, top.n + 1);
    return top.triple;
  }

  std::size_t open_column_count() const noexcept { return opened_; }

 private:
  struct cursor {
    Triple triple;
    u64 mu;
    u64 n;
  };

  struct after {
    bool operator()(const cursor& x, const cursor& y) const noexcept {
      return hypotenuse_order{}(y.triple, x.triple);
    }
  };

  void open_columns() {
    while (!exhausted_) {
      const Triple head = extended_triple(ExtendedIndex(next_mu_, 1));
      if (!bound_.admits(head)) {
        exhausted_ = true;
        break;
      }
      if (!heap_.empty() && head.c() > heap_.top().triple.c()) break;
      heap_.push(cursor{head, next_mu_, 1});
      ++opened_;
      next_mu_ = arith::add(next_mu_, mu_step_);
    }
  }

  void push(u64 mu, u64 n) {
    const Triple t = extended_triple(ExtendedIndex(mu, n));
    if (bound_.admits(t)) heap_.push(cursor{t, mu, n});
  }

  u64 mu_step_;
  EnumBound bound_;
  u64 next_mu_ = 1;
  bool exhausted_ = false;
  std::size_t opened_ = 0;
  std::priority_queue<cursor, std::vector<cursor>, after> heap_;
};

/// Every class-C triple with c <= c_max, once each, ordered by (c, a).
inline column_merge lattice_enumerate(EnumBound bound) { return column_merge(2, bound); }

/// Every Euclidean triple with c <= c_max, once each, ordered by (c, a).
/// Triples keep the orientation (mu(2n+mu), 2n(n+mu), ...) of the extended map.
inline column_merge extended_enumerate(EnumBound bound) { return column_merge(1, bound); }

}  // namespace triple_lattice

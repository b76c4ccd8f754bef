#pragma once

// Finite filtrations indexed by a consecutive range of integers.  Increasing
// filtrations (weight style) must reach the full space at the top key,
// decreasing ones (Hodge style) must start at it.  Only the keys where the
// subspace may change are stored; at() clamps outside the stored range so
// callers can evaluate at any integer.

#include <map>
#include <vector>

#include "periodgeom/subspace.hpp"

namespace periodgeom {

enum class FiltrationKind { Increasing, Decreasing };

template <class S>
class Filtration {
 public:
  Filtration(FiltrationKind kind, Index ambient, int lo,
             std::vector<Subspace<S>> pieces)
      : kind_(kind), ambient_(ambient), lo_(lo), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw DimensionError("filtration needs at least one step");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (pieces_[i].ambient_dim() != ambient_)
        throw DimensionError("filtration piece ambient mismatch");
      if (i == 0) continue;
      bool ok = kind_ == FiltrationKind::Increasing
                    ? pieces_[i].contains(pieces_[i - 1])
                    : pieces_[i - 1].contains(pieces_[i]);
      if (!ok) throw DimensionError("filtration pieces are not nested");
    }
    const Subspace<S>& top =
        kind_ == FiltrationKind::Increasing ? pieces_.back() : pieces_.front();
    const Subspace<S>& bottom =
        kind_ == FiltrationKind::Increasing ? pieces_.front() : pieces_.back();
    if (!top.is_full())
      throw DimensionError("filtration does not exhaust the ambient space");
    if (!bottom.is_zero())
      throw DimensionError("filtration must start from the zero subspace");
  }

  static Filtration increasing(Index ambient, int lo, std::vector<Subspace<S>> pieces) {
    return Filtration(FiltrationKind::Increasing, ambient, lo, std::move(pieces));
  }
  static Filtration decreasing(Index ambient, int lo, std::vector<Subspace<S>> pieces) {
    return Filtration(FiltrationKind::Decreasing, ambient, lo, std::move(pieces));
  }

  /// Builds from a key -> subspace map; keys must be consecutive.
  static Filtration from_map(FiltrationKind kind, Index ambient,
                             const std::map<int, Subspace<S>>& steps) {
    if (steps.empty()) throw DimensionError("filtration needs at least one step");
    int lo = steps.begin()->first;
    std::vector<Subspace<S>> pieces;
    int expect = lo;
    for (const auto& [k, v] : steps) {
      if (k != expect++) throw DimensionError("filtration keys must be consecutive");
      pieces.push_back(v);
    }
    return Filtration(kind, ambient, lo, std::move(pieces));
  }

  FiltrationKind kind() const { return kind_; }
  Index ambient_dim() const { return ambient_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(pieces_.size()) - 1; }

  /// Value at any integer; clamped to zero / full outside the stored range.
  const Subspace<S>& at(int k) const {
    if (k < lo_) return kind_ == FiltrationKind::Increasing ? zero_cache() : full_cache();
    if (k > hi()) return kind_ == FiltrationKind::Increasing ? full_cache() : zero_cache();
    return pieces_[static_cast<std::size_t>(k - lo_)];
  }

  /// dim at(k) - dim at(k-1) for increasing, dim at(k) - dim at(k+1) for decreasing.
  Index graded_dim(int k) const {
    return kind_ == FiltrationKind::Increasing ? at(k).dim() - at(k - 1).dim()
                                               : at(k).dim() - at(k + 1).dim();
  }

  friend bool operator==(const Filtration& a, const Filtration& b) {
    if (a.kind_ != b.kind_ || a.ambient_ != b.ambient_) return false;
    int lo = std::min(a.lo_, b.lo_);
    int hi = std::max(a.hi(), b.hi());
    for (int k = lo; k <= hi; ++k)
      if (a.at(k) != b.at(k)) return false;
    return true;
  }
  friend bool operator!=(const Filtration& a, const Filtration& b) { return !(a == b); }

  Filtration conjugated() const {
    std::vector<Subspace<S>> pieces;
    pieces.reserve(pieces_.size());
    for (const auto& p : pieces_) pieces.push_back(p.conjugated());
    return Filtration(kind_, ambient_, lo_, std::move(pieces));
  }

  template <class T>
  Filtration<T> cast() const {
    std::vector<Subspace<T>> pieces;
    pieces.reserve(pieces_.size());
    for (const auto& p : pieces_) pieces.push_back(p.template cast<T>());
    return Filtration<T>(kind_, ambient_, lo_, std::move(pieces));
  }

  /// Image filtration under an invertible map.
  Filtration transported(const MatrixX<S>& g) const {
    std::vector<Subspace<S>> pieces;
    pieces.reserve(pieces_.size());
    for (const auto& p : pieces_) pieces.push_back(p.map_image(g));
    return Filtration(kind_, ambient_, lo_, std::move(pieces));
  }

 private:
  const Subspace<S>& zero_cache() const {
    static thread_local std::map<Index, Subspace<S>> cache;
    auto it = cache.find(ambient_);
    if (it == cache.end()) it = cache.emplace(ambient_, Subspace<S>::zero(ambient_)).first;
    return it->second;
  }
  const Subspace<S>& full_cache() const {
    static thread_local std::map<Index, Subspace<S>> cache;
    auto it = cache.find(ambient_);
    if (it == cache.end()) it = cache.emplace(ambient_, Subspace<S>::full(ambient_)).first;
    return it->second;
  }

  FiltrationKind kind_;
  Index ambient_;
  int lo_;
  std::vector<Subspace<S>> pieces_;

  template <class>
  friend class Filtration;
};

}  // namespace periodgeom

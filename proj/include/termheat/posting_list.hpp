#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace termheat {

using DocOrdinal = std::uint32_t;

/// Strictly ascending list of document ordinals.
class PostingList {
 public:
  PostingList() = default;

  /// Throws Error(invalid_argument) unless `ids` is strictly ascending.
  explicit PostingList(std::vector<DocOrdinal> ids);
  PostingList(std::initializer_list<DocOrdinal> ids);

  /// All ordinals in [0, n).
  static PostingList all(std::size_t n);

  std::span<const DocOrdinal> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  DocOrdinal back() const { return ids_.back(); }
  bool contains(DocOrdinal id) const noexcept;

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const PostingList&, const PostingList&) = default;

 private:
  struct Trusted {};
  PostingList(Trusted, std::vector<DocOrdinal> ids) : ids_(std::move(ids)) {}

  friend PostingList intersect(const PostingList&, const PostingList&);
  friend PostingList unite(const PostingList&, const PostingList&);
  friend class PostingListBuilder;

  std::vector<DocOrdinal> ids_;
};

/// Appends ordinals in ascending order; repeated trailing ids are dropped.
class PostingListBuilder {
 public:
  void add(DocOrdinal id) {
    if (ids_.empty() || ids_.back() < id) ids_.push_back(id);
  }
  PostingList build() && { return PostingList(PostingList::Trusted{}, std::move(ids_)); }
  bool empty() const noexcept { return ids_.empty(); }

 private:
  std::vector<DocOrdinal> ids_;
};

// Merge or galloping search, picked by the size ratio of the operands.
PostingList intersect(const PostingList& a, const PostingList& b);
std::size_t intersection_size(const PostingList& a, const PostingList& b);
PostingList unite(const PostingList& a, const PostingList& b);

/// Intersects every list, smallest first. An empty span yields an empty list.
PostingList intersect_all(std::span<const PostingList* const> lists);

}  // namespace termheat

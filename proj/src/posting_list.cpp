#include "termheat/posting_list.hpp"

#include <algorithm>
#include <numeric>

#include "termheat/error.hpp"

namespace termheat {
namespace {

// Above this size ratio, galloping through the long list beats a merge.
constexpr std::size_t kGallopRatio = 16;

// First position in [from, end) whose value is >= target, found by
// doubling the step from `from` and then binary searching the bracket.
std::span<const DocOrdinal>::iterator gallop(std::span<const DocOrdinal>::iterator from,
                                             std::span<const DocOrdinal>::iterator end,
                                             DocOrdinal target) {
  std::size_t step = 1;
  auto lo = from;
  auto hi = from;
  while (hi != end && *hi < target) {
    lo = hi;
    const auto remaining = static_cast<std::size_t>(end - hi);
    hi += static_cast<std::ptrdiff_t>(std::min(step, remaining));
    step *= 2;
  }
  return std::lower_bound(lo, hi, target);
}

template <typename Emit>
void for_each_common(std::span<const DocOrdinal> a, std::span<const DocOrdinal> b, Emit emit) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return;

  if (b.size() / a.size() >= kGallopRatio) {
    auto pos = b.begin();
    for (DocOrdinal x : a) {
      pos = gallop(pos, b.end(), x);
      if (pos == b.end()) return;
      if (*pos == x) emit(x);
    }
    return;
  }

  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      emit(*i);
      ++i;
      ++j;
    }
  }
}

}  // namespace

PostingList::PostingList(std::vector<DocOrdinal> ids) : ids_(std::move(ids)) {
  if (std::adjacent_find(ids_.begin(), ids_.end(), std::greater_equal<>{}) != ids_.end())
    throw Error(Errc::invalid_argument, "posting list must be strictly ascending");
}

PostingList::PostingList(std::initializer_list<DocOrdinal> ids)
    : PostingList(std::vector<DocOrdinal>(ids)) {}

PostingList PostingList::all(std::size_t n) {
  std::vector<DocOrdinal> ids(n);
  std::iota(ids.begin(), ids.end(), DocOrdinal{0});
  return PostingList(Trusted{}, std::move(ids));
}

bool PostingList::contains(DocOrdinal id) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

PostingList intersect(const PostingList& a, const PostingList& b) {
  std::vector<DocOrdinal> out;
  out.reserve(std::min(a.size(), b.size()));
  for_each_common(a.ids(), b.ids(), [&](DocOrdinal x) { out.push_back(x); });
  return PostingList(PostingList::Trusted{}, std::move(out));
}

std::size_t intersection_size(const PostingList& a, const PostingList& b) {
  std::size_t n = 0;
  for_each_common(a.ids(), b.ids(), [&](DocOrdinal) { ++n; });
  return n;
}

PostingList unite(const PostingList& a, const PostingList& b) {
  std::vector<DocOrdinal> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PostingList(PostingList::Trusted{}, std::move(out));
}

PostingList intersect_all(std::span<const PostingList* const> lists) {
  if (lists.empty()) return {};
  std::vector<const PostingList*> order(lists.begin(), lists.end());
  std::sort(order.begin(), order.end(),
            [](const PostingList* x, const PostingList* y) { return x->size() < y->size(); });
  PostingList result = *order.front();
  for (std::size_t i = 1; i < order.size() && !result.empty(); ++i) {
    result = intersect(result, *order[i]);
  }
  return result;
}

}  // namespace termheat

#include "hypercover/cover.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hypercover {

namespace {

int degree(const CoverVector& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

void require_entries(const Hypergraph& h, const CoverVector& v) {
  if (static_cast<int>(v.size()) != h.vertex_count()) {
    throw std::invalid_argument("vector length does not match the vertex count");
  }
  for (int x : v) {
    if (x < 0) throw std::invalid_argument("negative entry in cover vector");
  }
}

bool leq(const CoverVector& a, const CoverVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

bool canonical_exponent_less(const CoverVector& a, const CoverVector& b) {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  return a > b;  // descending entry order within a degree
}

bool is_k_cover(const Hypergraph& h, const CoverVector& v, int k) {
  require_entries(h, v);
  if (k < 0) throw std::invalid_argument("negative k");
  if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) {
    return false;  // covers are nonzero by definition
  }
  for (const VertexSet& e : h.edges()) {
    int sum = 0;
    for (int vtx : e) sum += v[vtx - 1];
    if (sum < k) return false;
  }
  return true;
}

std::vector<CoverVector> minimal_vertex_covers(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > 24) throw GuardLimitError("instance too large for cover enumeration");
  const std::vector<std::uint64_t> masks = h.edge_masks();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint8_t> covers(size, 0);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    bool hit = true;
    for (std::uint64_t em : masks) {
      if ((mask & em) == 0) {
        hit = false;
        break;
      }
    }
    covers[mask] = hit;
  }
  std::vector<CoverVector> out;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    if (!covers[mask]) continue;
    bool minimal = true;
    for (std::uint64_t rest = mask; rest;) {
      const std::uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (covers[mask ^ bit]) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    CoverVector v(n, 0);
    for (int i = 0; i < n; ++i) v[i] = static_cast<int>(mask >> i & 1);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), canonical_exponent_less);
  return out;
}

namespace detail {

std::optional<std::vector<CoverVector>> decompose_given_covers(
    const Hypergraph& h, const std::vector<CoverVector>& covers,
    const CoverVector& x, int k) {
  if (k == 1) {
    if (!is_k_cover(h, x, 1)) return std::nullopt;
    return std::vector<CoverVector>{x};
  }
  const int n = h.vertex_count();
  for (const CoverVector& m : covers) {
    if (!leq(m, x)) continue;
    CoverVector rest(n);
    for (int i = 0; i < n; ++i) rest[i] = x[i] - m[i];
    if (auto sub = decompose_given_covers(h, covers, rest, k - 1)) {
      std::vector<CoverVector> parts;
      parts.reserve(k);
      parts.push_back(m);
      for (auto& p : *sub) parts.push_back(std::move(p));
      return parts;
    }
  }
  return std::nullopt;
}

}  // namespace detail

std::optional<std::vector<CoverVector>> decompose_into_one_covers(
    const Hypergraph& h, const CoverVector& x, int k) {
  if (k < 1) throw std::invalid_argument("part count must be at least 1");
  if (!is_k_cover(h, x, k)) {
    throw std::invalid_argument("input is not a k-cover");
  }
  return detail::decompose_given_covers(h, minimal_vertex_covers(h), x, k);
}

CoverVector cover_from_independent(const Hypergraph& h, const VertexSet& s) {
  if (!is_independent(h, s)) {
    throw std::invalid_argument("set is not independent");
  }
  const int n = h.vertex_count();
  CoverVector v(n, 1);
  for (int vtx : s) v[vtx - 1] = 0;
  for (int vtx : neighborhood(h, s)) v[vtx - 1] = 2;
  return v;
}

EmbeddedFreeResult embedded_free_by_independent_sets(const Hypergraph& h) {
  const std::vector<CoverVector> covers = minimal_vertex_covers(h);
  IndependentSetStream stream(h);
  while (auto s = stream.next()) {
    const CoverVector a = cover_from_independent(h, *s);
    if (!detail::decompose_given_covers(h, covers, a, 2)) {
      return EmbeddedFreeResult{false, std::move(*s)};
    }
  }
  return EmbeddedFreeResult{true, std::nullopt};
}

std::pair<VertexSet, CoverVector> reduce_two_cover(const Hypergraph& h,
                                                   const CoverVector& w) {
  if (!is_k_cover(h, w, 2)) {
    throw std::invalid_argument("input is not a 2-cover");
  }
  VertexSet s;
  for (int i = 0; i < h.vertex_count(); ++i) {
    if (w[i] == 0) s.push_back(i + 1);
  }
  const CoverVector a = cover_from_independent(h, s);
  CoverVector y(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    y[i] = w[i] - a[i];
    if (y[i] < 0) {
      throw ConsistencyError("2-cover reduction produced a negative residual");
    }
  }
  return {std::move(s), std::move(y)};
}

}  // namespace hypercover

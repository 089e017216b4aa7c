#include "lifekit/grid.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace lifekit {

namespace {

using u64 = std::uint64_t;

constexpr Coord kMin = std::numeric_limits<Coord>::min();
constexpr Coord kMax = std::numeric_limits<Coord>::max();
constexpr Coord kMargin = 8;

// Nine 64-cell lanes in, next state of the centre lane out.
inline u64 life_word(u64 uw, u64 u, u64 ue, u64 w, u64 m, u64 e, u64 dw, u64 d, u64 de) {
  u64 s1 = uw ^ u ^ ue, c1 = (uw & u) | (ue & (uw ^ u));
  u64 s2 = w ^ e ^ dw, c2 = (w & e) | (dw & (w ^ e));
  u64 s3 = d ^ de, c3 = d & de;
  u64 b0 = s1 ^ s2 ^ s3, ca = (s1 & s2) | (s3 & (s1 ^ s2));
  u64 t = c1 ^ c2 ^ c3, cb = (c1 & c2) | (c3 & (c1 ^ c2));
  u64 b1 = t ^ ca, cc = t & ca;
  return b1 & ~(cb | cc) & (b0 | m);
}

inline u64 mix64(u64 z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

LifeGrid::LifeGrid(const Pattern& p, const Topology& t) : topo_(t) {
  if (t.is_torus()) {
    if (t.width < 3 || t.height < 3) throw InputError("torus must be at least 3x3");
    require_within(p, t);
    if (static_cast<u64>(t.width) * static_cast<u64>(t.height) > max_cells)
      throw InputError("torus too large");
    w_ = t.width;
    h_ = t.height;
    nw_ = static_cast<std::size_t>((w_ + 63) / 64);
    int k = static_cast<int>(w_ - 64 * static_cast<Coord>(nw_ - 1));
    last_mask_ = k == 64 ? ~u64{0} : (u64{1} << k) - 1;
    cur_.assign(nw_ * static_cast<std::size_t>(h_), 0);
    nxt_ = cur_;
    for (const Cell& c : p.cells()) set(c.x, c.y);
  } else {
    reframe(p.bounding_box());
    for (const Cell& c : p.cells()) set(c.x - ox_, c.y - oy_);
  }
}

void LifeGrid::set(Coord x, Coord y) {
  cur_[static_cast<std::size_t>(y) * nw_ + static_cast<std::size_t>(x / 64)] |= u64{1} << (x % 64);
}

bool LifeGrid::get(Coord x, Coord y) const {
  if (topo_.is_torus()) {
    x %= w_;
    y %= h_;
    if (x < 0) x += w_;
    if (y < 0) y += h_;
  } else {
    if (x < ox_ || y < oy_) return false;
    x -= ox_;
    y -= oy_;
    if (x >= w_ || y >= h_) return false;
  }
  return (cur_[static_cast<std::size_t>(y) * nw_ + static_cast<std::size_t>(x / 64)] >> (x % 64)) & 1;
}

// Rebuild the plane window around `live` (pattern coordinates), keeping the
// current contents.
void LifeGrid::reframe(const Box& live) {
  Coord x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  if (!live.empty()) {
    if (static_cast<u64>(live.x1) - static_cast<u64>(live.x0) >= max_cells ||
        static_cast<u64>(live.y1) - static_cast<u64>(live.y0) >= max_cells)
      throw InputError("pattern too sparse for grid simulation");
    x0 = live.x0 < kMin + kMargin ? kMin : live.x0 - kMargin;
    y0 = live.y0 < kMin + kMargin ? kMin : live.y0 - kMargin;
    x1 = live.x1 > kMax - kMargin ? kMax : live.x1 + kMargin;
    y1 = live.y1 > kMax - kMargin ? kMax : live.y1 + kMargin;
  }
  Coord nwid = x1 - x0 + 1, nhei = y1 - y0 + 1;
  if (static_cast<u64>(nwid) * static_cast<u64>(nhei) > max_cells)
    throw InputError("pattern too sparse for grid simulation");

  std::size_t nnw = static_cast<std::size_t>((nwid + 63) / 64);
  std::vector<u64> fresh(nnw * static_cast<std::size_t>(nhei), 0);
  if (!cur_.empty()) {
    for (Coord y = 0; y < h_; ++y) {
      const u64* row = &cur_[static_cast<std::size_t>(y) * nw_];
      for (std::size_t i = 0; i < nw_; ++i) {
        for (u64 bits = row[i]; bits; bits &= bits - 1) {
          Coord x = static_cast<Coord>(i * 64) + std::countr_zero(bits);
          Coord nx = (ox_ + x) - x0, ny = (oy_ + y) - y0;
          fresh[static_cast<std::size_t>(ny) * nnw + static_cast<std::size_t>(nx / 64)] |=
              u64{1} << (nx % 64);
        }
      }
    }
  }
  ox_ = x0;
  oy_ = y0;
  w_ = nwid;
  h_ = nhei;
  nw_ = nnw;
  int k = static_cast<int>(w_ - 64 * static_cast<Coord>(nw_ - 1));
  last_mask_ = k == 64 ? ~u64{0} : (u64{1} << k) - 1;
  cur_ = std::move(fresh);
  nxt_.assign(cur_.size(), 0);
}

bool LifeGrid::touches_border() const {
  const u64* first = cur_.data();
  const u64* last = cur_.data() + static_cast<std::size_t>(h_ - 1) * nw_;
  for (std::size_t i = 0; i < nw_; ++i)
    if (first[i] | last[i]) return true;
  const int hb = static_cast<int>((w_ - 1) % 64);
  for (Coord y = 0; y < h_; ++y) {
    const u64* row = &cur_[static_cast<std::size_t>(y) * nw_];
    if ((row[0] & 1) || ((row[nw_ - 1] >> hb) & 1)) return true;
  }
  return false;
}

void LifeGrid::step() {
  const bool torus = topo_.is_torus();
  if (!torus && touches_border()) {
    reframe(live_box());
    if (touches_border()) throw OverflowError("live cell on the coordinate boundary");
  }

  const std::size_t n = nw_;
  const int hb = static_cast<int>((w_ - 1) % 64);
  static thread_local std::vector<u64> zero;
  if (zero.size() < n) zero.assign(n, 0);

  auto row_ptr = [&](Coord y) -> const u64* {
    if (y < 0) {
      if (!torus) return zero.data();
      y += h_;
    } else if (y >= h_) {
      if (!torus) return zero.data();
      y -= h_;
    }
    return &cur_[static_cast<std::size_t>(y) * n];
  };
  auto west = [&](const u64* r, std::size_t i) {
    u64 in = i ? r[i - 1] >> 63 : (torus ? (r[n - 1] >> hb) & 1 : 0);
    return (r[i] << 1) | in;
  };
  auto east = [&](const u64* r, std::size_t i) {
    u64 v = r[i] >> 1;
    if (i + 1 < n) return v | (r[i + 1] << 63);
    return torus ? v | ((r[0] & 1) << hb) : v;
  };

  for (Coord y = 0; y < h_; ++y) {
    const u64* up = row_ptr(y - 1);
    const u64* mid = row_ptr(y);
    const u64* dn = row_ptr(y + 1);
    u64* out = &nxt_[static_cast<std::size_t>(y) * n];
    for (std::size_t i = 0; i < n; ++i) {
      auto quiet = [&](std::size_t j) { return !(up[j] | mid[j] | dn[j]); };
      bool wraps = torus && (i == 0 || i + 1 == n);
      if (!wraps && quiet(i) && (i == 0 || quiet(i - 1)) && (i + 1 == n || quiet(i + 1))) {
        out[i] = 0;
        continue;
      }
      out[i] = life_word(west(up, i), up[i], east(up, i), west(mid, i), mid[i], east(mid, i),
                         west(dn, i), dn[i], east(dn, i));
    }
    out[n - 1] &= last_mask_;
  }
  cur_.swap(nxt_);
  ++gen_;
}

void LifeGrid::step(std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) step();
}

Pattern LifeGrid::pattern() const {
  std::vector<Cell> out;
  out.reserve(population());
  for (Coord y = 0; y < h_; ++y) {
    const u64* row = &cur_[static_cast<std::size_t>(y) * nw_];
    for (std::size_t i = 0; i < nw_; ++i)
      for (u64 bits = row[i]; bits; bits &= bits - 1)
        out.push_back({ox_ + static_cast<Coord>(i * 64) + std::countr_zero(bits), oy_ + y});
  }
  return Pattern::from_sorted(std::move(out));
}

std::size_t LifeGrid::population() const {
  std::size_t n = 0;
  for (u64 w : cur_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool LifeGrid::empty() const {
  return std::all_of(cur_.begin(), cur_.end(), [](u64 w) { return w == 0; });
}

Box LifeGrid::live_box() const {
  Box b;
  bool any = false;
  for (Coord y = 0; y < h_; ++y) {
    const u64* row = &cur_[static_cast<std::size_t>(y) * nw_];
    for (std::size_t i = 0; i < nw_; ++i) {
      if (!row[i]) continue;
      Coord lo = static_cast<Coord>(i * 64) + std::countr_zero(row[i]);
      Coord hi = static_cast<Coord>(i * 64) + 63 - std::countl_zero(row[i]);
      if (!any) {
        b = {lo, y, hi, y};
        any = true;
      } else {
        b.x0 = std::min(b.x0, lo);
        b.x1 = std::max(b.x1, hi);
        b.y1 = y;
      }
    }
  }
  if (!any) return {};
  return {ox_ + b.x0, oy_ + b.y0, ox_ + b.x1, oy_ + b.y1};
}

std::uint64_t LifeGrid::digest() const {
  u64 h = mix64(static_cast<u64>(w_) ^ (static_cast<u64>(h_) << 32));
  for (u64 w : cur_) h = mix64(h ^ w) + 0x9E3779B97F4A7C15ULL;
  return h;
}

}  // namespace lifekit

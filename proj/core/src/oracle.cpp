#include <polytri/oracle.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace polytri {

StringLayout::StringLayout(std::vector<int> interior_per_side)
    : interior_(std::move(interior_per_side)) {
  if (interior_.size() < 2)
    throw std::invalid_argument("StringLayout: need at least 2 strings");
  n_ = static_cast<int>(interior_.size());
  for (int a : interior_) {
    if (a < 0) throw std::invalid_argument("StringLayout: negative interior count");
    n_ += a;
  }
  if (n_ < 3) throw std::invalid_argument("StringLayout: need at least 3 points");
  corner_.resize(interior_.size());
  owner_.assign(static_cast<size_t>(n_), -1);
  int pos = 0;
  for (size_t i = 0; i < interior_.size(); ++i) {
    corner_[i] = pos;
    ++pos;
    for (int j = 0; j < interior_[i]; ++j) owner_[static_cast<size_t>(pos++)] = static_cast<int>(i);
  }
  assert(pos == n_);
}

StringLayout StringLayout::balanced(SubdivisionParams p) {
  p.validate();
  if (p.points() < 3) throw std::invalid_argument("StringLayout: k*r must be >= 3");
  return StringLayout(std::vector<int>(static_cast<size_t>(p.k), p.r - 1));
}

StringLayout StringLayout::triangle(TriangleParams t) {
  t.validate();
  return StringLayout({t.c, t.a, t.b});
}

StringLayout StringLayout::partial(PartialParams p, bool spread) {
  p.validate();
  const int s = p.subdivided_sides;
  const int k = p.n_points - s;
  if (k < 2) throw std::invalid_argument("StringLayout: partial polygon needs >= 2 sides");
  std::vector<int> sides(static_cast<size_t>(k), 0);
  if (!spread) {
    for (int i = 0; i < s; ++i) sides[static_cast<size_t>(i)] = 1;
  } else {
    // round-robin placement; the count is placement-independent
    for (int i = 0; i < s; ++i) sides[static_cast<size_t>((2 * i) % k)] = 1;
    if (std::count(sides.begin(), sides.end(), 1) != s) {
      sides.assign(static_cast<size_t>(k), 0);
      for (int i = 0; i < s; ++i) sides[static_cast<size_t>(i)] = 1;
      std::rotate(sides.begin(), sides.begin() + 1, sides.end());
    }
  }
  return StringLayout(sides);
}

int StringLayout::point(int side, int idx) const {
  const int k = side_count();
  side %= k;
  if (side < 0) side += k;
  const int len = interior_[static_cast<size_t>(side)];
  if (idx < 0 || idx > len + 1) throw std::out_of_range("StringLayout::point");
  if (idx == len + 1) return corner((side + 1) % k);
  return (corner_[static_cast<size_t>(side)] + idx) % n_;
}

bool StringLayout::is_corner(int p) const { return owner_[static_cast<size_t>(p)] < 0; }

int StringLayout::interior_side(int p) const { return owner_[static_cast<size_t>(p)]; }

bool StringLayout::same_string(int p, int q) const {
  if (p == q) return true;
  auto strings_of = [&](int v, int out[2]) {
    int so = owner_[static_cast<size_t>(v)];
    if (so >= 0) {
      out[0] = so;
      out[1] = -1;
      return;
    }
    // corner i joins strings i-1 and i
    int i = static_cast<int>(std::lower_bound(corner_.begin(), corner_.end(), v) - corner_.begin());
    out[0] = (i + side_count() - 1) % side_count();
    out[1] = i;
  };
  int sp[2], sq[2];
  strings_of(p, sp);
  strings_of(q, sq);
  for (int x : sp)
    for (int y : sq)
      if (x >= 0 && x == y) return true;
  return false;
}

bool StringLayout::essentially_forbidden(int p, int q) const {
  int d = p - q;
  if (d < 0) d = -d;
  if (d != 2 && d != n_ - 2) return false;
  return same_string(p, q);
}

bool Triangulation::contains(int p, int q) const {
  if (p > q) std::swap(p, q);
  return std::binary_search(diagonals.begin(), diagonals.end(), std::make_pair(p, q));
}

void Triangulation::normalize() {
  for (auto& d : diagonals)
    if (d.first > d.second) std::swap(d.first, d.second);
  std::sort(diagonals.begin(), diagonals.end());
}

namespace {

// Recursive ear decomposition: each pending segment lo..hi is a boundary
// chain closed by an edge or an already chosen diagonal (lo,hi); the apex of
// the triangle over (lo,hi) is chosen in increasing order, which makes the
// stream deterministic. State is O(n) per branch.
struct Enumerator {
  int n = 0;
  const StringLayout* layout = nullptr;  // null: plain convex enumeration
  const TriangulationVisitor* visit = nullptr;
  std::vector<std::pair<int, int>> chosen;
  std::vector<std::pair<int, int>> segments;
  Count count = 0;

  bool chord_allowed(int p, int q) const {
    return layout == nullptr || !layout->essentially_forbidden(p, q);
  }

  void emit() {
    ++count;
    if (!visit) return;
    Triangulation t;
    t.n = n;
    t.diagonals = chosen;
    t.normalize();
    if (layout != nullptr) {
      // Pruning only tested distance-2 pairs; no longer same-string diagonal
      // may survive either.
      for (auto [p, q] : t.diagonals)
        if (layout->same_string(p, q))
          throw std::logic_error("enumerate_legal: same-string diagonal survived pruning");
    }
    (*visit)(t);
  }

  void run() {
    segments.clear();
    chosen.clear();
    segments.emplace_back(0, n - 1);
    go();
  }

  void go() {
    if (segments.empty()) {
      emit();
      return;
    }
    const auto seg = segments.back();
    segments.pop_back();
    const auto [lo, hi] = seg;
    if (lo + 1 >= hi) {
      go();
    } else {
      for (int apex = lo + 1; apex < hi; ++apex) {
        const bool left_edge = (apex == lo + 1);
        const bool right_edge = (apex == hi - 1);
        if (!left_edge && !chord_allowed(lo, apex)) continue;
        if (!right_edge && !chord_allowed(apex, hi)) continue;
        size_t pushed = 0;
        if (!left_edge) {
          chosen.emplace_back(lo, apex);
          segments.emplace_back(lo, apex);
          ++pushed;
        }
        if (!right_edge) {
          chosen.emplace_back(apex, hi);
          segments.emplace_back(apex, hi);
          ++pushed;
        }
        go();
        segments.resize(segments.size() - pushed);
        chosen.resize(chosen.size() - pushed);
      }
    }
    segments.push_back(seg);
  }
};

}  // namespace

void enumerate_convex(int n, const TriangulationVisitor& visit) {
  if (n < 3) throw std::invalid_argument("enumerate_convex: n must be >= 3");
  Enumerator e;
  e.n = n;
  e.visit = &visit;
  e.run();
}

void enumerate_legal(const StringLayout& layout, const TriangulationVisitor& visit) {
  Enumerator e;
  e.n = layout.n();
  e.layout = &layout;
  e.visit = &visit;
  e.run();
}

Count count_legal(const StringLayout& layout) {
  Enumerator e;
  e.n = layout.n();
  e.layout = &layout;
  e.run();
  return e.count;
}

Count count_legal_dp(const StringLayout& layout) {
  const int n = layout.n();
  // ways[i][j]: triangulations of the chain i..j closed by (i,j), j > i.
  std::vector<std::vector<Count>> ways(static_cast<size_t>(n), std::vector<Count>(static_cast<size_t>(n), Count(0)));
  for (int i = 0; i + 1 < n; ++i) ways[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = 1;
  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len < n; ++i) {
      int j = i + len;
      Count acc = 0;
      for (int m = i + 1; m < j; ++m) {
        if (m != i + 1 && layout.essentially_forbidden(i, m)) continue;
        if (m != j - 1 && layout.essentially_forbidden(m, j)) continue;
        acc += ways[static_cast<size_t>(i)][static_cast<size_t>(m)] * ways[static_cast<size_t>(m)][static_cast<size_t>(j)];
      }
      ways[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
    }
  }
  return ways[0][static_cast<size_t>(n - 1)];
}

Count count_legal_slow(const StringLayout& layout) {
  Count total = 0;
  enumerate_convex(layout.n(), [&](const Triangulation& t) {
    for (auto [p, q] : t.diagonals)
      if (layout.same_string(p, q)) return;
    ++total;
  });
  return total;
}

// ---- classification ----

TriClassification classify(const Triangulation& t, TriangleParams params) {
  params.validate();
  StringLayout layout = StringLayout::triangle(params);
  const int n = layout.n();
  if (t.n != n || static_cast<int>(t.diagonals.size()) != n - 3)
    throw std::invalid_argument("classify: not a triangulation of Delta(a,b,c)");
  for (auto [p, q] : t.diagonals)
    if (layout.same_string(p, q))
      throw std::invalid_argument("classify: triangulation uses a forbidden diagonal");

  auto has_edge = [&](int p, int q) {
    if (p > q) std::swap(p, q);
    if (q - p == 1 || (p == 0 && q == n - 1)) return true;  // boundary edge
    return t.contains(p, q);
  };

  // Ear at corner i: the triangle (prev, corner, next) is a face, i.e. the
  // chord joining the two boundary neighbours is present.
  int ears = 0;
  std::array<bool, 3> ear{false, false, false};
  for (int i = 0; i < 3; ++i) {
    int c = layout.corner(i);
    int prev = (c + n - 1) % n;
    int next = (c + 1) % n;
    if (has_edge(prev, next)) {
      ear[static_cast<size_t>(i)] = true;
      ++ears;
    }
  }

  // Central triangle: three mutually connected interior points on three
  // different sides; the region they bound holds no further vertex, so it is
  // automatically a face.
  bool central = false;
  for (size_t d1 = 0; d1 < t.diagonals.size() && !central; ++d1)
    for (size_t d2 = d1 + 1; d2 < t.diagonals.size() && !central; ++d2) {
      auto [a1, b1] = t.diagonals[d1];
      auto [a2, b2] = t.diagonals[d2];
      int shared = -1, u = -1, v = -1;
      if (a1 == a2) shared = a1, u = b1, v = b2;
      else if (a1 == b2) shared = a1, u = b1, v = a2;
      else if (b1 == a2) shared = b1, u = a1, v = b2;
      else if (b1 == b2) shared = b1, u = a1, v = a2;
      if (shared < 0 || !t.contains(u, v)) continue;
      int s0 = layout.interior_side(shared), s1 = layout.interior_side(u), s2 = layout.interior_side(v);
      if (s0 >= 0 && s1 >= 0 && s2 >= 0 && s0 != s1 && s1 != s2 && s0 != s2) central = true;
    }

  // Corner-side diagonals per corner.
  std::array<int, 3> corner_side{0, 0, 0};
  for (auto [p, q] : t.diagonals) {
    for (int i = 0; i < 3; ++i) {
      int c = layout.corner(i);
      int other = (p == c) ? q : (q == c) ? p : -1;
      if (other >= 0 && layout.interior_side(other) == (i + 1) % 3) ++corner_side[static_cast<size_t>(i)];
    }
  }

  TriClassification out{};
  out.ear_count = ears;
  out.has_central_triangle = central;
  if (central) {
    if (ears != 3 || corner_side != std::array<int, 3>{0, 0, 0})
      throw std::logic_error("classify: central triangle with unexpected ear/diagonal pattern");
    out.cls = TriClass::T;
    return out;
  }
  if (ears != 2) throw std::logic_error("classify: expected exactly two ears");
  int from = -1;
  for (int i = 0; i < 3; ++i) {
    if (corner_side[static_cast<size_t>(i)] > 0) {
      if (from >= 0) throw std::logic_error("classify: corner-side diagonals from two corners");
      from = i;
    }
  }
  if (from < 0) throw std::logic_error("classify: D-type without corner-side diagonal");
  if (ear[static_cast<size_t>(from)])
    throw std::logic_error("classify: corner-side diagonals from an eared corner");
  out.cls = from == 0 ? TriClass::D_A : from == 1 ? TriClass::D_B : TriClass::D_C;
  return out;
}

}  // namespace polytri

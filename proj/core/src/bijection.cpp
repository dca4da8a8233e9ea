#include <polytri/oracle.hpp>

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace polytri {

namespace {

// Strict crossing of two chords of a convex polygon: exactly one endpoint of
// the second lies in the open arc between the endpoints of the first.
bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.first > a.second) std::swap(a.first, a.second);
  if (b.first == a.first || b.first == a.second || b.second == a.first || b.second == a.second)
    return false;
  auto inside = [&](int x) { return a.first < x && x < a.second; };
  return inside(b.first) != inside(b.second);
}

// The corner separated by an interior-interior element, with its side
// coordinates (l on side i-1, m on side i).
struct Separator {
  int i, l, m;
};

Separator separator_of(const StringLayout& lay, int u, int v) {
  int su = lay.interior_side(u), sv = lay.interior_side(v);
  assert(su >= 0 && sv >= 0 && su != sv);
  int i = (sv == (su + 1) % 3) ? sv : su;
  if (i == su) std::swap(u, v);  // now u on side i-1, v on side i
  int l = u - lay.corner((i + 2) % 3);
  int m = v - lay.corner(i);
  return {i, l, m};
}

// All generalized separator readings (i, l, m) of an edge of the modified
// set: l in [0, s_{i-1}] may name the corner i-1, m in [1, s_i + 1] may name
// the corner i+1.
std::vector<Separator> readings_of(const StringLayout& lay, int u, int v) {
  std::vector<Separator> out;
  auto side_pos = [&](int p, int side, bool allow_start_corner, bool allow_end_corner) {
    // position of p on `side`, -1 if p does not lie there under the rules
    int len = lay.interior_count(side);
    if (p == lay.corner(side)) return allow_start_corner ? 0 : -1;
    if (p == lay.corner((side + 1) % 3)) return allow_end_corner ? len + 1 : -1;
    if (lay.interior_side(p) == side) return p - lay.corner(side);
    return -1;
  };
  for (int i = 0; i < 3; ++i) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      int l = side_pos(x, (i + 2) % 3, true, false);
      int m = side_pos(y, i, false, true);
      if (l >= 0 && m >= 1) out.push_back({i, l, m});
    }
  }
  return out;
}

std::vector<std::vector<int>> split_into_faces(int n, std::vector<std::pair<int, int>> chords) {
  std::vector<std::vector<int>> faces;
  std::vector<int> whole(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) whole[static_cast<size_t>(i)] = i;

  std::vector<std::vector<int>> work{whole};
  while (!work.empty()) {
    std::vector<int> cyc = std::move(work.back());
    work.pop_back();
    const int p = static_cast<int>(cyc.size());
    bool split = false;
    for (auto [u, v] : chords) {
      int iu = -1, iv = -1;
      for (int i = 0; i < p; ++i) {
        if (cyc[static_cast<size_t>(i)] == u) iu = i;
        if (cyc[static_cast<size_t>(i)] == v) iv = i;
      }
      if (iu < 0 || iv < 0) continue;
      if (iu > iv) std::swap(iu, iv);
      if (iv - iu == 1 || iv - iu == p - 1) continue;  // bounding edge here
      std::vector<int> f1(cyc.begin() + iu, cyc.begin() + iv + 1);
      std::vector<int> f2(cyc.begin() + iv, cyc.end());
      f2.insert(f2.end(), cyc.begin(), cyc.begin() + iu + 1);
      work.push_back(std::move(f1));
      work.push_back(std::move(f2));
      split = true;
      break;
    }
    if (!split) faces.push_back(std::move(cyc));
  }
  return faces;
}

std::array<int, 3> type_vector_of(const StringLayout& lay,
                                  const std::vector<std::pair<int, int>>& diagonals) {
  std::array<int, 3> type{0, 0, 0};
  for (auto [u, v] : diagonals) ++type[static_cast<size_t>(separator_of(lay, u, v).i)];
  return type;
}

void validate_fundamental(const StringLayout& lay, const FundamentalSet& f) {
  for (auto [u, v] : f.diagonals) {
    if (u == v) throw std::invalid_argument("fundamental set: degenerate diagonal");
    int su = lay.interior_side(u), sv = lay.interior_side(v);
    if (su < 0 || sv < 0 || su == sv)
      throw std::invalid_argument("fundamental set: diagonals must join interior points of two sides");
  }
  for (size_t i = 0; i < f.diagonals.size(); ++i)
    for (size_t j = i + 1; j < f.diagonals.size(); ++j) {
      auto a = f.diagonals[i], b = f.diagonals[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
        throw std::invalid_argument("fundamental set: diagonals share an endpoint");
      if (chords_cross(a, b)) throw std::invalid_argument("fundamental set: diagonals cross");
    }
}

}  // namespace

void enumerate_fundamental_sets(TriangleParams t, const FundamentalSetVisitor& visit) {
  t.validate();
  StringLayout lay = StringLayout::triangle(t);
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < lay.n(); ++u)
    for (int v = u + 1; v < lay.n(); ++v) {
      int su = lay.interior_side(u), sv = lay.interior_side(v);
      if (su >= 0 && sv >= 0 && su != sv) candidates.emplace_back(u, v);
    }

  std::vector<std::pair<int, int>> current;
  auto emit = [&] {
    FundamentalSet f;
    f.diagonals = current;
    std::sort(f.diagonals.begin(), f.diagonals.end());
    f.type = type_vector_of(lay, f.diagonals);
    visit(f);
  };
  auto compatible = [&](std::pair<int, int> d) {
    for (auto c : current) {
      if (c.first == d.first || c.first == d.second || c.second == d.first || c.second == d.second)
        return false;
      if (chords_cross(c, d)) return false;
    }
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == candidates.size()) {
      emit();
      return;
    }
    rec(idx + 1);
    if (compatible(candidates[idx])) {
      current.push_back(candidates[idx]);
      rec(idx + 1);
      current.pop_back();
    }
  };
  rec(0);
}

FundamentalSet fundamental_set_of(const Triangulation& t, TriangleParams params) {
  params.validate();
  StringLayout lay = StringLayout::triangle(params);
  if (t.n != lay.n() || static_cast<int>(t.diagonals.size()) != lay.n() - 3)
    throw std::invalid_argument("fundamental_set_of: not a triangulation of Delta(a,b,c)");
  FundamentalSet f;
  std::array<int, 3> s{params.c, params.a, params.b};  // interior counts by side
  for (int i = 0; i < 3; ++i) {
    const int sm = s[static_cast<size_t>(i)];
    const int sl = s[static_cast<size_t>((i + 2) % 3)];
    for (int l = 1; l <= sl; ++l)
      for (int m = 1; m <= sm; ++m) {
        int u = lay.point((i + 2) % 3, l);
        if (!t.contains(u, lay.point(i, m))) continue;
        if (!t.contains(u, lay.point(i, m + 1))) continue;
        // for m = s_i the successor is the corner-side diagonal and the
        // third condition holds automatically
        if (m < sm && t.contains(u, lay.point(i, m + 2))) continue;
        f.diagonals.emplace_back(std::min(u, lay.point(i, m)), std::max(u, lay.point(i, m)));
      }
  }
  std::sort(f.diagonals.begin(), f.diagonals.end());
  f.type = type_vector_of(lay, f.diagonals);
  return f;
}

Triangulation triangulation_of(const FundamentalSet& f, TriangleParams params) {
  params.validate();
  StringLayout lay = StringLayout::triangle(params);
  const int n = lay.n();
  validate_fundamental(lay, f);

  // Modified set: shift every element one step along its m-side.
  std::set<std::pair<int, int>> prime;
  for (auto [u, v] : f.diagonals) {
    Separator s = separator_of(lay, u, v);
    int a = lay.point((s.i + 2) % 3, s.l);
    int b = lay.point(s.i, s.m + 1);
    prime.insert({std::min(a, b), std::max(a, b)});
  }
  // Ear diagonals at corners that got no corner-side diagonal.
  for (int i = 0; i < 3; ++i) {
    int c = lay.corner(i);
    bool has_corner_side = false;
    for (auto [u, v] : prime)
      if (u == c || v == c) has_corner_side = true;
    if (has_corner_side) continue;
    const int s_prev = lay.interior_count((i + 2) % 3);
    const int s_here = lay.interior_count(i);
    const int s_next = lay.interior_count((i + 1) % 3);
    // With side i-1 empty this ear would end at corner i-1 and always cross
    // the ear of corner i-1; the reconstruction keeps that one.
    if (s_prev == 0 && s_here >= 1 && s_next >= 1) continue;
    int a = (c + n - 1) % n;
    int b = (c + 1) % n;
    if (lay.same_string(a, b)) continue;  // both neighbouring sides empty
    prime.insert({std::min(a, b), std::max(a, b)});
  }

  std::vector<std::pair<int, int>> chords(prime.begin(), prime.end());
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j)
      if (chords_cross(chords[i], chords[j]))
        throw std::invalid_argument("fundamental set: modified set crosses itself");

  // Block rules on the faces of the modified set.
  std::vector<std::pair<int, int>> added;
  auto is_chord = [&](int u, int v) {
    return prime.count({std::min(u, v), std::max(u, v)}) > 0;
  };
  auto is_boundary_edge = [&](std::pair<int, int> d) {
    return d.second - d.first == 1 || (d.first == 0 && d.second == n - 1);
  };
  for (const auto& face : split_into_faces(n, chords)) {
    const int p = static_cast<int>(face.size());
    std::vector<std::pair<int, int>> on_face;
    for (int i = 0; i < p; ++i) {
      int u = face[static_cast<size_t>(i)], v = face[static_cast<size_t>((i + 1) % p)];
      if (is_chord(u, v)) on_face.emplace_back(u, v);
    }
    if (on_face.size() <= 1) continue;

    std::vector<std::vector<Separator>> reads;
    for (auto [u, v] : on_face) reads.push_back(readings_of(lay, u, v));

    if (on_face.size() == 2) {
      // Nested separators of one corner: join the outer l with the inner m.
      std::set<std::pair<int, int>> outcomes;
      for (const auto& r0 : reads[0])
        for (const auto& r1 : reads[1]) {
          if (r0.i != r1.i) continue;
          int a = lay.point((r0.i + 2) % 3, std::min(r0.l, r1.l));
          int b = lay.point(r0.i, std::min(r0.m, r1.m));
          outcomes.insert({std::min(a, b), std::max(a, b)});
        }
      if (outcomes.size() != 1)
        throw std::logic_error("triangulation_of: unmatched or ambiguous two-element block");
      auto d = *outcomes.begin();
      if (!is_chord(d.first, d.second) && !is_boundary_edge(d)) added.push_back(d);
    } else if (on_face.size() == 3) {
      // Central block: the three elements separate the three corners; the
      // inner endpoints span the central triangle.
      std::set<std::vector<std::pair<int, int>>> outcomes;
      for (const auto& r0 : reads[0])
        for (const auto& r1 : reads[1])
          for (const auto& r2 : reads[2]) {
            std::array<int, 3> m_of{-1, -1, -1};
            if ((1 << r0.i | 1 << r1.i | 1 << r2.i) != 0b111) continue;
            m_of[static_cast<size_t>(r0.i)] = r0.m;
            m_of[static_cast<size_t>(r1.i)] = r1.m;
            m_of[static_cast<size_t>(r2.i)] = r2.m;
            std::vector<std::pair<int, int>> tri;
            for (int i = 0; i < 3; ++i) {
              int a = lay.point(i, m_of[static_cast<size_t>(i)]);
              int b = lay.point((i + 1) % 3, m_of[static_cast<size_t>((i + 1) % 3)]);
              if (a > b) std::swap(a, b);
              if (!is_boundary_edge({a, b})) tri.emplace_back(a, b);
            }
            std::sort(tri.begin(), tri.end());
            outcomes.insert(tri);
          }
      if (outcomes.size() != 1)
        throw std::logic_error("triangulation_of: ambiguous three-element block");
      for (auto d : *outcomes.begin())
        if (!is_chord(d.first, d.second)) added.push_back(d);
    } else {
      throw std::logic_error("triangulation_of: block bounded by more than three elements");
    }
  }

  for (auto d : added) prime.insert(d);
  chords.assign(prime.begin(), prime.end());

  // Complete fans: every remaining non-triangular face is a one-string chain
  // plus a single apex.
  for (const auto& face : split_into_faces(n, chords)) {
    const int p = static_cast<int>(face.size());
    if (p <= 3) continue;
    int apex = -1;
    for (int cand = 0; cand < p && apex < 0; ++cand) {
      std::vector<int> chain;
      for (int j = 1; j < p; ++j) chain.push_back(face[static_cast<size_t>((cand + j) % p)]);
      bool ok = true;
      for (size_t j = 0; j + 1 < chain.size() && ok; ++j) {
        int d = std::abs(chain[j] - chain[j + 1]);
        if (d != 1 && d != n - 1) ok = false;
      }
      if (ok && lay.same_string(chain.front(), chain.back())) apex = cand;
    }
    if (apex < 0) throw std::logic_error("triangulation_of: residual block is not a fan");
    for (int j = 2; j < p - 1; ++j) {
      int a = face[static_cast<size_t>(apex)];
      int b = face[static_cast<size_t>((apex + j) % p)];
      prime.insert({std::min(a, b), std::max(a, b)});
    }
  }

  Triangulation t;
  t.n = n;
  t.diagonals.assign(prime.begin(), prime.end());
  t.normalize();
  if (static_cast<int>(t.diagonals.size()) != n - 3)
    throw std::logic_error("triangulation_of: wrong diagonal count after completion");
  if (!(fundamental_set_of(t, params) == f))
    throw std::logic_error("triangulation_of: reconstruction does not invert the forward map");
  return t;
}

}  // namespace polytri

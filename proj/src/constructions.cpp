#include "funbox/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace funbox {
namespace {

inline constexpr std::size_t kMaxGeneratedVertices = 100000;

void guard_size(std::size_t vertices, const char* family) {
  if (vertices > kMaxGeneratedVertices) {
    throw SizeLimitError(std::string(family) + " would have " + std::to_string(vertices) + " vertices", kMaxGeneratedVertices);
  }
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t e = 0; e < exp; ++e) {
    if (r > kMaxGeneratedVertices) return kMaxGeneratedVertices + 1;
    r *= base;
  }
  return r;
}

Construction finish(GraphBuilder&& b, ConstructionLabels labels) {
  b.set_labels(labels.to_strings());
  return {std::move(b).build(), std::move(labels)};
}

std::vector<VertexId> id_range(std::size_t first, std::size_t count) {
  std::vector<VertexId> ids(count);
  std::iota(ids.begin(), ids.end(), static_cast<VertexId>(first));
  return ids;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::half: return "half";
    case Family::abc: return "abc";
    case Family::gk: return "gk";
    case Family::hni: return "hni";
    case Family::hypercube: return "hypercube";
  }
  return "half";
}

Family family_from_string(std::string_view s) {
  for (auto f : {Family::half, Family::abc, Family::gk, Family::hni, Family::hypercube})
    if (to_string(f) == s) return f;
  throw InvalidArgument("unknown family '" + std::string(s) + "'");
}

std::vector<std::string> ConstructionLabels::to_strings() const {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) {
    std::string s;
    switch (v.part) {
      case Part::x: s = "x:" + std::to_string(v.order); break;
      case Part::y: s = "y:" + std::to_string(v.order); break;
      case Part::a: s = "A:" + std::to_string(v.order); break;
      case Part::c: s = "C:" + std::to_string(v.order); break;
      case Part::b:
        if (family == Family::gk) {
          s = "B:" + std::to_string(v.bx) + "," + std::to_string(v.by) + ":" + std::to_string(v.block[0]) + "," +
              std::to_string(v.block[1]) + "," + std::to_string(v.block[2]) + "," + std::to_string(v.block[3]);
        } else {
          s = "B:" + std::to_string(v.order) + ":" + std::to_string(v.order2);
        }
        break;
      case Part::point: s = "point:" + std::to_string(v.order); break;
      case Part::box: s = "box:" + std::to_string(v.order); break;
      case Part::cube: s = v.bits; break;
    }
    if (v.added) s += "*";
    out.push_back(std::move(s));
  }
  return out;
}

VertexSet ConstructionLabels::part(Part p) const {
  VertexSet s(vertices.size());
  for (VertexId v = 0; v < vertices.size(); ++v)
    if (vertices[v].part == p) s.insert(v);
  return s;
}

// ---------------------------------------------------------------------------

Construction half_graph(std::size_t n) {
  if (n == 0) throw InvalidArgument("half graph needs n >= 1");
  guard_size(2 * n, "half graph");
  GraphBuilder b(2 * n);
  ConstructionLabels labels{Family::half, std::vector<VertexLabel>(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    labels.vertices[i].part = Part::x;
    labels.vertices[i].order = i + 1;
    labels.vertices[n + i].part = Part::y;
    labels.vertices[n + i].order = i + 1;
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(n + j));
  }
  return finish(std::move(b), std::move(labels));
}

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Construction abc_graph(std::size_t n, std::span<const std::size_t> perm) {
  if (n == 0) throw InvalidArgument("ABC graph needs n >= 1");
  if (perm.size() != n) throw InvalidArgument("permutation length " + std::to_string(perm.size()) + " != n");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("invalid permutation of [n]");
    seen[p] = true;
  }
  guard_size(3 * n, "ABC graph");

  GraphBuilder b(3 * n);
  ConstructionLabels labels{Family::abc, std::vector<VertexLabel>(3 * n)};
  b.add_clique(id_range(0, n));
  b.add_clique(id_range(n, n));
  b.add_clique(id_range(2 * n, n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.vertices[i] = {.part = Part::a, .order = i + 1};
    labels.vertices[n + i] = {.part = Part::b, .order = i + 1};
    labels.vertices[2 * n + i] = {.part = Part::c, .order = i + 1};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(n + j));
  for (std::size_t i = 0; i < n; ++i) {
    const auto b_prime = static_cast<VertexId>(n + perm[i]);
    labels.vertices[b_prime].order2 = i + 1;
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(b_prime, static_cast<VertexId>(2 * n + j));
  }
  return finish(std::move(b), std::move(labels));
}

std::vector<std::pair<std::int64_t, std::int64_t>> gk_base_block(std::size_t k) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const auto kk = static_cast<std::int64_t>(k);
  for (std::int64_t p = 1; p <= kk; ++p)
    for (std::int64_t q = 0; q <= kk - 1; ++q) out.emplace_back(p * kk - q, q * kk + p);
  return out;
}

Construction g_k(std::size_t k) {
  if (k < 2) throw InvalidArgument("G_k needs k >= 2");
  const std::size_t t = ipow(k, 3);
  const std::size_t nb = ipow(k, 4);
  guard_size(2 * t + nb, "G_k");
  const std::size_t n = 2 * t + nb;

  GraphBuilder b(n);
  ConstructionLabels labels{Family::gk, std::vector<VertexLabel>(n)};
  const auto base = gk_base_block(k);
  const auto shift = static_cast<std::int64_t>(k * k);

  std::size_t id = t;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      std::size_t idx = 0;
      for (std::size_t p = 1; p <= k; ++p) {
        for (std::size_t q = 0; q < k; ++q, ++idx, ++id) {
          auto& lab = labels.vertices[id];
          lab.part = Part::b;
          lab.bx = base[idx].first + static_cast<std::int64_t>(i - 1) * shift;
          lab.by = base[idx].second + static_cast<std::int64_t>(j - 1) * shift;
          lab.block = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(p), static_cast<int>(q)};
          lab.order = id - t + 1;
        }
      }
    }
  }
  for (std::size_t i = 0; i < t; ++i) {
    labels.vertices[i] = {.part = Part::a, .order = i + 1};
    labels.vertices[t + nb + i] = {.part = Part::c, .order = i + 1};
  }

  b.add_clique(id_range(0, t));
  b.add_clique(id_range(t, nb));
  b.add_clique(id_range(t + nb, t));
  for (std::size_t v = t; v < t + nb; ++v) {
    const auto& lab = labels.vertices[v];
    for (std::size_t i = 1; i <= t; ++i) {
      if (static_cast<std::int64_t>(i) < lab.bx) b.add_edge(static_cast<VertexId>(i - 1), static_cast<VertexId>(v));
      if (lab.by < static_cast<std::int64_t>(i)) b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(t + nb + i - 1));
    }
  }
  return finish(std::move(b), std::move(labels));
}

AbcExtension extend_gk_to_abc(const Construction& gk) {
  const auto& in = gk.labels;
  if (in.family != Family::gk || in.vertices.size() != gk.graph.size()) throw InvalidArgument("extend_gk_to_abc expects a G_k construction");
  std::vector<VertexId> as, bs, cs;
  for (VertexId v = 0; v < in.vertices.size(); ++v) {
    switch (in.vertices[v].part) {
      case Part::a: as.push_back(v); break;
      case Part::b: bs.push_back(v); break;
      case Part::c: cs.push_back(v); break;
      default: throw InvalidArgument("G_k labels contain a non-ABC part");
    }
  }
  std::size_t k = 2;
  while (ipow(k, 3) < as.size()) ++k;
  const std::size_t t = ipow(k, 3);
  const std::size_t nb = ipow(k, 4);
  if (as.size() != t || cs.size() != t || bs.size() != nb) throw InvalidArgument("G_k part sizes do not match k^3, k^4, k^3");
  for (VertexId v : bs) {
    const auto& lab = in.vertices[v];
    if (lab.bx < 1 || lab.by < 1 || lab.bx > static_cast<std::int64_t>(t) || lab.by > static_cast<std::int64_t>(t)) {
      throw InvalidArgument("G_k B coordinates outside [1, k^3]");
    }
  }
  auto by_order = [&](VertexId a_id) { return in.vertices[a_id].order; };
  std::sort(as.begin(), as.end(), [&](VertexId l, VertexId r) { return by_order(l) < by_order(r); });
  std::sort(cs.begin(), cs.end(), [&](VertexId l, VertexId r) { return by_order(l) < by_order(r); });

  // B grouped by b_x drives the A side; grouped by b_y drives the C side
  std::vector<VertexId> b_by_x = bs;
  std::vector<VertexId> b_by_y = bs;
  std::stable_sort(b_by_x.begin(), b_by_x.end(), [&](VertexId l, VertexId r) { return in.vertices[l].bx < in.vertices[r].bx; });
  std::stable_sort(b_by_y.begin(), b_by_y.end(), [&](VertexId l, VertexId r) { return in.vertices[l].by < in.vertices[r].by; });

  const std::size_t n0 = gk.graph.size();
  const std::size_t n = 3 * nb;
  GraphBuilder b(n);
  for (auto [u, v] : gk.graph.edges()) b.add_edge(u, v);

  ConstructionLabels out{Family::abc, std::vector<VertexLabel>(n)};
  for (VertexId v = 0; v < n0; ++v) out.vertices[v] = in.vertices[v];

  // A' order position r (1-based): original a_i sits at r = k*i
  std::vector<VertexId> a_prime(nb);
  std::vector<VertexId> c_prime(nb);
  VertexId next = static_cast<VertexId>(n0);
  for (std::size_t r = 1; r <= nb; ++r) {
    const VertexId v = (r % k == 0) ? as[r / k - 1] : next++;
    a_prime[r - 1] = v;
    out.vertices[v].part = Part::a;
    out.vertices[v].order = r;
    out.vertices[v].added = v >= n0;
  }
  // C' order position s: original c_j sits at s = k*(j-1) + 1
  for (std::size_t s = 1; s <= nb; ++s) {
    const VertexId v = ((s - 1) % k == 0) ? cs[(s - 1) / k] : next++;
    c_prime[s - 1] = v;
    out.vertices[v].part = Part::c;
    out.vertices[v].order = s;
    out.vertices[v].added = v >= n0;
  }
  for (std::size_t l = 0; l < nb; ++l) {
    out.vertices[b_by_x[l]].order = l + 1;
    out.vertices[b_by_y[l]].order2 = l + 1;
  }

  b.add_clique(a_prime);
  b.add_clique(c_prime);
  for (std::size_t r = 0; r < nb; ++r) {
    if (a_prime[r] >= n0)
      for (std::size_t l = r + 1; l < nb; ++l) b.add_edge(a_prime[r], b_by_x[l]);
    if (c_prime[r] >= n0)
      for (std::size_t l = 0; l < r; ++l) b.add_edge(c_prime[r], b_by_y[l]);
  }

  AbcExtension ext;
  ext.abc = finish(std::move(b), std::move(out));
  ext.embedding.resize(n0);
  std::iota(ext.embedding.begin(), ext.embedding.end(), VertexId{0});
  return ext;
}

std::vector<std::vector<VertexId>> point_box_members(std::size_t n, std::size_t i) {
  if (n < 1 || i < 1 || i > n) throw InvalidArgument("H^n_i needs n >= 1 and 1 <= i <= n");
  const std::size_t points = ipow(n, i);
  guard_size(points + i * ipow(n, i - 1), "H^n_i");

  std::vector<std::vector<VertexId>> boxes{id_range(0, n)};
  std::size_t level_points = n;
  for (std::size_t level = 2; level <= i; ++level) {
    std::vector<std::vector<VertexId>> next;
    next.reserve(n * boxes.size() + level_points);
    for (std::size_t copy = 0; copy < n; ++copy) {
      for (const auto& box : boxes) {
        auto& moved = next.emplace_back(box);
        for (auto& p : moved) p += static_cast<VertexId>(copy * level_points);
      }
    }
    for (std::size_t m = 0; m < level_points; ++m) {
      auto& box = next.emplace_back();
      for (std::size_t copy = 0; copy < n; ++copy) box.push_back(static_cast<VertexId>(copy * level_points + m));
    }
    boxes = std::move(next);
    level_points *= n;
  }
  return boxes;
}

Construction point_box_incidence(std::size_t n, std::size_t i) {
  const auto boxes = point_box_members(n, i);
  const std::size_t points = ipow(n, i);
  GraphBuilder b(points + boxes.size());
  ConstructionLabels labels{Family::hni, std::vector<VertexLabel>(points + boxes.size())};
  for (std::size_t p = 0; p < points; ++p) labels.vertices[p] = {.part = Part::point, .order = p + 1};
  for (std::size_t m = 0; m < boxes.size(); ++m) {
    const auto box_id = static_cast<VertexId>(points + m);
    labels.vertices[box_id] = {.part = Part::box, .order = m + 1};
    for (VertexId p : boxes[m]) b.add_edge(p, box_id);
  }
  return finish(std::move(b), std::move(labels));
}

Construction hypercube(std::size_t n) {
  if (n < 1 || n > kMaxHypercubeDim) throw InvalidArgument("hypercube dimension must be in 1..16");
  const std::size_t size = std::size_t{1} << n;
  GraphBuilder b(size);
  ConstructionLabels labels{Family::hypercube, std::vector<VertexLabel>(size)};
  for (std::size_t v = 0; v < size; ++v) {
    auto& lab = labels.vertices[v];
    lab.part = Part::cube;
    lab.order = v + 1;
    for (std::size_t d = n; d-- > 0;) lab.bits.push_back(((v >> d) & 1U) != 0 ? '1' : '0');
    for (std::size_t d = 0; d < n; ++d) {
      const std::size_t u = v ^ (std::size_t{1} << d);
      if (u > v) b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(u));
    }
  }
  return finish(std::move(b), std::move(labels));
}

}  // namespace funbox

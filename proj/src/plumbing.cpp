#include "brieskorn/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "brieskorn/errors.hpp"

namespace brieskorn {

PlumbingGraph::PlumbingGraph(
    std::vector<PlumbingVertex> vertices,
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> edges_by_id) {
  std::sort(vertices.begin(), vertices.end(),
            [](const PlumbingVertex& a, const PlumbingVertex& b) { return a.id < b.id; });
  std::map<std::int64_t, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const PlumbingVertex& v = vertices[i];
    if (v.genus < 0) throw input_error("plumbing vertex: genus must be >= 0");
    if (!index.emplace(v.id, i).second)
      throw input_error("plumbing vertex ids must be distinct");
  }
  vertices_ = std::move(vertices);

  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> merged;
  for (const auto& [ids, w] : edges_by_id) {
    auto it_i = index.find(ids.first);
    auto it_j = index.find(ids.second);
    if (it_i == index.end() || it_j == index.end())
      throw input_error("plumbing edge references an unknown vertex id");
    std::size_t i = it_i->second, j = it_j->second;
    if (i == j) throw input_error("plumbing graph: self-loops are not allowed");
    if (i > j) std::swap(i, j);
    merged[{i, j}] += w;
  }
  for (const auto& [key, w] : merged)
    if (w != 0) edges_.push_back({key.first, key.second, w});
}

bool PlumbingGraph::all_genus_zero() const {
  for (const PlumbingVertex& v : vertices_)
    if (v.genus != 0) return false;
  return true;
}

bool PlumbingGraph::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const PlumbingEdge& e : edges_) parent[find(e.i)] = find(e.j);
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

bool PlumbingGraph::is_tree() const {
  return is_connected() && edges_.size() + 1 == vertices_.size();
}

PlumbingGraph PlumbingGraph::parse(const std::string& text) {
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw input_error("graph parse error on line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      PlumbingVertex v;
      std::string g_field, e_field;
      if (!(ls >> v.id >> g_field >> e_field)) fail("expected 'v <id> genus=<g> e=<euler>'");
      if (g_field.rfind("genus=", 0) != 0 || e_field.rfind("e=", 0) != 0)
        fail("expected fields genus=<g> and e=<euler>");
      try {
        v.genus = std::stoll(g_field.substr(6));
        v.euler = std::stoll(e_field.substr(2));
      } catch (const std::exception&) {
        fail("bad integer in vertex fields");
      }
      vertices.push_back(v);
    } else if (tag == "e") {
      std::int64_t i = 0, j = 0, w = 1;
      if (!(ls >> i >> j)) fail("expected 'e <i> <j> [w=<weight>]'");
      std::string w_field;
      if (ls >> w_field) {
        if (w_field.rfind("w=", 0) != 0) fail("expected optional field w=<weight>");
        try {
          w = std::stoll(w_field.substr(2));
        } catch (const std::exception&) {
          fail("bad integer edge weight");
        }
      }
      edges.push_back({{i, j}, w});
    } else {
      fail("unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (vertices.empty()) throw input_error("graph parse error: no vertices");
  return PlumbingGraph(std::move(vertices), std::move(edges));
}

PlumbingGraph PlumbingGraph::named(const std::string& name) {
  auto chain = [](std::int64_t k) {
    std::vector<PlumbingVertex> vs;
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> es;
    for (std::int64_t i = 0; i < k; ++i) vs.push_back({i, 0, -2});
    for (std::int64_t i = 0; i + 1 < k; ++i) es.push_back({{i, i + 1}, 1});
    return PlumbingGraph(std::move(vs), std::move(es));
  };
  if (name == "E8") {
    // Central vertex 0 with arms of lengths 1, 2 and 4.
    std::vector<PlumbingVertex> vs;
    for (std::int64_t i = 0; i < 8; ++i) vs.push_back({i, 0, -2});
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> es{
        {{0, 1}, 1}, {{0, 2}, 1}, {{2, 3}, 1},
        {{0, 4}, 1}, {{4, 5}, 1}, {{5, 6}, 1}, {{6, 7}, 1}};
    return PlumbingGraph(std::move(vs), std::move(es));
  }
  if (name.size() > 1 && name[0] == 'A') {
    std::int64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoll(name.substr(1), &used);
      if (used != name.size() - 1) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k >= 1) return chain(k);
  }
  throw input_error("unknown named graph '" + name + "' (expected E8 or A<k>)");
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
  IntersectionMatrix m(g.vertices().size());
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    m.at(i, i) = static_cast<long>(g.vertices()[i].euler);
  for (const PlumbingEdge& e : g.edges()) {
    m.at(e.i, e.j) = static_cast<long>(e.weight);
    m.at(e.j, e.i) = static_cast<long>(e.weight);
  }
  return m;
}

// Fraction-free (Bareiss) elimination with row pivoting.
mpz_class determinant(const IntersectionMatrix& m) {
  IntersectionMatrix w = m;
  const std::size_t n = w.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && w.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(w.at(k, j), w.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_class quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0) throw internal_error("fraction-free elimination not exact");
        w.at(i, j) = quot;
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

bool is_negative_definite(const IntersectionMatrix& m) {
  if (m.size() == 0) return false;
  // Without pivoting the Bareiss pivots are the leading principal minors;
  // a zero pivot already refutes definiteness.
  IntersectionMatrix w = m;
  const std::size_t n = w.size();
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class& minor = w.at(k, k);  // k+1st leading principal minor
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minor) != expected) return false;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_class quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0) throw internal_error("fraction-free elimination not exact");
        w.at(i, j) = quot;
      }
    prev = w.at(k, k);
  }
  return true;
}

std::int64_t matrix_signature(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  std::vector<mpq_class> q(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i * n + j] = m.at(i, j);
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), std::size_t{0});
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return q[i * n + j]; };

  std::int64_t sig = 0;
  while (!live.empty()) {
    std::size_t pivot = live.size();
    for (std::size_t x = 0; x < live.size(); ++x)
      if (at(live[x], live[x]) != 0) {
        pivot = x;
        break;
      }
    if (pivot < live.size()) {
      const std::size_t p = live[pivot];
      const mpq_class d = at(p, p);
      sig += sgn(d) > 0 ? 1 : -1;
      live.erase(live.begin() + pivot);
      for (std::size_t x : live)
        for (std::size_t y : live)
          at(x, y) -= at(x, p) * at(p, y) / d;
      continue;
    }
    // No nonzero diagonal left: find an off-diagonal entry; the hyperbolic
    // pair contributes +1 -1 and the complement is reduced by the 2x2 block.
    std::size_t bi = live.size(), bj = live.size();
    for (std::size_t x = 0; x < live.size() && bi == live.size(); ++x)
      for (std::size_t y = x + 1; y < live.size(); ++y)
        if (at(live[x], live[y]) != 0) {
          bi = x;
          bj = y;
          break;
        }
    if (bi == live.size()) break;  // zero form on the rest
    const std::size_t p = live[bi], r = live[bj];
    const mpq_class b = at(p, r);
    live.erase(live.begin() + bj);
    live.erase(live.begin() + bi);
    for (std::size_t x : live)
      for (std::size_t y : live)
        at(x, y) -= (at(x, p) * at(r, y) + at(x, r) * at(p, y)) / b;
  }
  return sig;
}

SmithForm smith_normal_form(const IntersectionMatrix& m) {
  const std::size_t n = m.size();
  IntersectionMatrix w = m;

  // Elimination to diagonal form.  The pivot is re-selected as a nonzero
  // entry of minimal absolute value in the remaining block after every
  // inexact pass, which keeps quotients small and coefficient growth in
  // check; any nonzero remainder strictly shrinks the pivot, so the loop
  // terminates.
  std::size_t t = 0;
  while (t < n) {
    std::size_t pi = n, pj = n;
    mpz_class best;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (w.at(i, j) == 0) continue;
        mpz_class mag = abs(w.at(i, j));
        if (pi == n || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi == n) break;  // remaining block is zero
    if (pi != t)
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(t, j), w.at(pi, j));
    if (pj != t)
      for (std::size_t i = 0; i < n; ++i) std::swap(w.at(i, t), w.at(i, pj));

    bool exact = true;
    for (std::size_t i = t + 1; i < n; ++i) {
      if (w.at(i, t) == 0) continue;
      mpz_class quot;
      mpz_fdiv_q(quot.get_mpz_t(), w.at(i, t).get_mpz_t(), w.at(t, t).get_mpz_t());
      for (std::size_t j = t; j < n; ++j) w.at(i, j) -= quot * w.at(t, j);
      if (w.at(i, t) != 0) exact = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (w.at(t, j) == 0) continue;
      mpz_class quot;
      mpz_fdiv_q(quot.get_mpz_t(), w.at(t, j).get_mpz_t(), w.at(t, t).get_mpz_t());
      for (std::size_t i = t; i < n; ++i) w.at(i, j) -= quot * w.at(i, t);
      if (w.at(t, j) != 0) exact = false;
    }
    if (!exact) continue;  // smaller remainders exist: re-select the pivot

    // Pivot row and column are clear.  It must also divide the rest of the
    // block for the divisibility chain; fold an offending row in and redo.
    bool divides = true;
    for (std::size_t i = t + 1; i < n && divides; ++i)
      for (std::size_t j = t + 1; j < n && divides; ++j)
        if (w.at(i, j) % w.at(t, t) != 0) {
          for (std::size_t jj = t; jj < n; ++jj) w.at(t, jj) += w.at(i, jj);
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }

  SmithForm out;
  out.rank = t;
  out.free_rank = n - t;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(abs(w.at(i, i)));
  for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
    if (out.invariant_factors[i + 1] % out.invariant_factors[i] != 0)
      throw internal_error("Smith form divisibility chain broken");
  for (const mpz_class& d : out.invariant_factors)
    if (d > 1) out.cokernel.push_back(d);
  for (std::size_t i = 0; i < out.free_rank; ++i) out.cokernel.push_back(0);
  return out;
}

SmithForm boundary_homology(const PlumbingGraph& g) {
  if (!g.all_genus_zero())
    throw input_error("boundary homology: only genus-0 plumbing graphs are supported");
  if (!g.is_tree())
    throw input_error("boundary homology: only plumbing trees are supported");
  return smith_normal_form(intersection_matrix(g));
}

std::int64_t euler_characteristic_boundary(const PlumbingGraph& g) {
  const SmithForm h = boundary_homology(g);
  // Closed orientable 3-manifold: b0 = b3 = 1 and b2 = b1 by duality.
  const std::int64_t b1 = static_cast<std::int64_t>(h.free_rank);
  const std::int64_t chi = 1 - b1 + b1 - 1;
  if (chi != 0) throw internal_error("boundary Euler characteristic is nonzero");
  return chi;
}

}  // namespace brieskorn

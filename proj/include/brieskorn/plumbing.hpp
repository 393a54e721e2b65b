#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace brieskorn {

// Symmetric integer matrix, dense.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  explicit IntersectionMatrix(std::size_t n) : n_(n), a_(n * n, mpz_class(0)) {}

  std::size_t size() const { return n_; }
  mpz_class& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  bool operator==(const IntersectionMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<mpz_class> a_;
};

struct PlumbingVertex {
  std::int64_t id = 0;
  std::int64_t genus = 0;
  std::int64_t euler = 0;  // self-intersection
};

struct PlumbingEdge {
  std::size_t i = 0;  // vertex indices after id sorting
  std::size_t j = 0;
  std::int64_t weight = 1;
};

// Weighted graph of a resolution/plumbing: vertices carry genus and Euler
// number, edges carry intersection weights.  Self-loops are rejected;
// parallel edges are merged by summing weights.
class PlumbingGraph {
 public:
  PlumbingGraph(std::vector<PlumbingVertex> vertices,
                std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>>
                    edges_by_id);

  const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
  const std::vector<PlumbingEdge>& edges() const { return edges_; }

  bool all_genus_zero() const;
  bool is_connected() const;
  bool is_tree() const;  // connected and acyclic

  // Text format: `v <id> genus=<g> e=<euler>` and `e <i> <j> [w=<weight>]`
  // lines, '#' comments.
  static PlumbingGraph parse(const std::string& text);

  // Built-in graphs: "E8" and "A<k>" (k vertices in a chain, all Euler
  // numbers -2, unit edge weights).
  static PlumbingGraph named(const std::string& name);

 private:
  std::vector<PlumbingVertex> vertices_;  // sorted by id
  std::vector<PlumbingEdge> edges_;
};

IntersectionMatrix intersection_matrix(const PlumbingGraph& g);

// Exact determinant (fraction-free elimination).
mpz_class determinant(const IntersectionMatrix& m);

// Leading principal minors alternate in sign starting negative.
bool is_negative_definite(const IntersectionMatrix& m);

// Signature of the symmetric form, exact (rational symmetric reduction;
// isotropic pairs contribute zero).
std::int64_t matrix_signature(const IntersectionMatrix& m);

// Invariant factors d_1 | d_2 | ... of an integer matrix together with the
// cokernel presentation.
struct SmithForm {
  std::vector<mpz_class> invariant_factors;  // positive, dividing chain
  std::size_t rank = 0;
  std::size_t free_rank = 0;                 // n - rank
  std::vector<mpz_class> cokernel;           // cyclic orders > 1, then 0 per free summand

  bool is_trivial_cokernel() const { return cokernel.empty(); }
};

SmithForm smith_normal_form(const IntersectionMatrix& m);

// First homology of the plumbing boundary as the cokernel of the
// intersection matrix; requires a genus-0 tree.
SmithForm boundary_homology(const PlumbingGraph& g);

// Euler characteristic of the boundary 3-manifold from its Betti numbers;
// always 0, asserted.
std::int64_t euler_characteristic_boundary(const PlumbingGraph& g);

}  // namespace brieskorn

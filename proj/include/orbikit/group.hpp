#ifndef ORBIKIT_GROUP_HPP
#define ORBIKIT_GROUP_HPP

#include <cstddef>
#include <vector>

#include "orbikit/intmatrix.hpp"
#include "orbikit/rational.hpp"

namespace orbikit {

// Element coordinates, one entry per cyclic factor.
using Coords = std::vector<long>;

// Product of cyclic groups Z/n_1 x ... x Z/n_r, written additively.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<long> orders);

  const std::vector<long>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  long order() const { return order_; }

  Coords zero() const { return Coords(orders_.size(), 0); }
  Coords reduce(Coords g) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords scale(long n, const Coords& a) const;
  long element_order(const Coords& a) const;

  // Lexicographic enumeration; index_of inverts element_at.
  std::vector<Coords> elements() const;
  long index_of(const Coords& g) const;
  Coords element_at(long idx) const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }
  bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

 private:
  std::vector<long> orders_;
  long order_;
};

// H -> G given by where the standard generators of H land.  The map
// h -> sum h_j * images[j] must be injective.
struct SubgroupEmbedding {
  FiniteAbelianGroup sub;
  FiniteAbelianGroup ambient;
  std::vector<Coords> images;  // one per cyclic factor of sub

  Coords embed(const Coords& h) const;
};

// Builds the embedding with H = prod Z/ord(images[j]); throws input_error
// if the resulting homomorphism is not injective.
SubgroupEmbedding embedding_from_images(const FiniteAbelianGroup& ambient,
                                        const std::vector<Coords>& images);

// Closure of a generating set under addition, sorted lexicographically.
std::vector<Coords> subgroup_closure(const FiniteAbelianGroup& g,
                                     const std::vector<Coords>& gens);

// All elements of the image subgroup, sorted.
std::vector<Coords> subgroup_elements(const SubgroupEmbedding& e);

// G/H in invariant-factor form with an explicit projection and a section.
class QuotientPresentation {
 public:
  QuotientPresentation(const FiniteAbelianGroup& ambient, const SubgroupEmbedding& h);

  const FiniteAbelianGroup& ambient() const { return ambient_; }
  const FiniteAbelianGroup& quotient() const { return quotient_; }

  Coords project(const Coords& g) const;
  Coords section(const Coords& k) const;  // some preimage of k

 private:
  FiniteAbelianGroup ambient_;
  FiniteAbelianGroup quotient_;
  IntMatrix u_, u_inv_;
  std::vector<long> diag_;
  std::vector<std::size_t> kept_;
};

// Every subgroup of g, each as its sorted element list.
std::vector<std::vector<Coords>> all_subgroups(const FiniteAbelianGroup& g);

// Canonical embedding (invariant-factor H plus generator images) of the
// subgroup given by its element set.
SubgroupEmbedding embedding_from_subset(const FiniteAbelianGroup& g,
                                        const std::vector<Coords>& subset);

// Every injective homomorphism H -> g whose source is in canonical
// invariant-factor form, grouped over all subgroups.
std::vector<SubgroupEmbedding> all_embeddings(const FiniteAbelianGroup& g);

// All abelian groups of order 1..max_order, one per isomorphism class,
// in invariant-factor form.
std::vector<FiniteAbelianGroup> abelian_groups_up_to(long max_order);

}  // namespace orbikit

#endif

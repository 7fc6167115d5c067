#ifndef GOSPACE_INVARIANTS_HPP
#define GOSPACE_INVARIANTS_HPP

#include "gospace/reductive_space.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gospace {

/// Exponent vector over the complement basis.
using Exponent = std::vector<unsigned>;

/// All exponents of total degree d over n variables, graded-lex descending
/// (x0^d first, x_{n-1}^d last).
std::vector<Exponent> monomials(std::size_t n, unsigned d);

/// Homogeneous element of the symmetric algebra S(m).
struct SymPoly {
  unsigned degree = 0;
  std::map<Exponent, Scalar, std::greater<>> coefficients;

  friend bool operator==(const SymPoly &, const SymPoly &) = default;
};

std::string to_string(const SymPoly &p, const std::vector<std::string> &m_labels);

/// Matrix of the derivation of S^d(m) extending xi -> [h_j, xi]_m by the
/// Leibniz rule, columns and rows in graded-lex order.
Matrix derivation_matrix(const ReductiveSpace &space, std::size_t j, unsigned d);

/// Echelon basis of the common kernel of all isotropy derivations in degree d.
std::vector<SymPoly> invariant_basis(const ReductiveSpace &space, unsigned d);

struct InvariantDims {
  std::string space;
  std::vector<std::size_t> real_dims;
  std::vector<std::size_t> crown_dims;
  bool consistent = true;
};

/// Per-degree invariant dimensions over Q and over the crown.
InvariantDims check_invariants_realform(const ReductiveSpace &space, unsigned max_degree);

// ---------------------------------------------------------------------------
// Enveloping algebra in PBW normal form.
//
// Letters index the basis of g reordered so that complement positions come
// first (letter a = a-th complement vector) and isotropy positions last
// (letter |m| + r = r-th isotropy vector). A word is normal when its letters
// are non-decreasing; monomials containing a letter >= |m| then span the left
// ideal U(g)h.

using Word = std::vector<std::size_t>;
using PBWElement = std::map<Word, Scalar>;

enum class RewriteStrategy { leftmost, rightmost };

class PbwAlgebra {
public:
  explicit PbwAlgebra(const ReductiveSpace &space, RewriteStrategy strategy = RewriteStrategy::leftmost);

  std::size_t letters() const { return bracket_.size(); }
  std::size_t dim_m() const { return dim_m_; }

  /// Normal form of an arbitrary combination of words.
  PBWElement normalize(const PBWElement &raw);
  PBWElement normalize_word(const Word &w);

  PBWElement multiply(const PBWElement &a, const PBWElement &b);
  /// a b - b a in normal form.
  PBWElement commutator(const PBWElement &a, const PBWElement &b);

  /// Average over all orderings of each monomial's letters, normalized.
  PBWElement symmetrize(const SymPoly &p);

  /// Label of a letter, for printing.
  const std::string &label(std::size_t letter) const { return labels_[letter]; }
  const std::vector<std::string> &labels() const { return labels_; }

private:
  std::size_t dim_m_;
  RewriteStrategy strategy_;
  std::vector<std::string> labels_;
  // bracket_[p][q] = [L_p, L_q] as (letter, coefficient) pairs.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> bracket_;
  std::map<Word, PBWElement> memo_;
};

/// Drops every monomial containing an isotropy letter.
PBWElement reduce_mod_isotropy(const PBWElement &e, std::size_t dim_m);

void add_scaled(PBWElement &acc, const PBWElement &e, const Scalar &s);
std::string to_string(const PBWElement &e, const std::vector<std::string> &letter_labels);

struct CommutatorRefutation {
  std::size_t p = 0;  // indices into CommutatorReport::invariants
  std::size_t q = 0;
  std::string nonzero_term;
  PBWElement residue;
};

struct InvariantRef {
  unsigned degree = 0;
  std::size_t index = 0;
  SymPoly poly;
};

struct CommutatorReport {
  std::string space;
  unsigned degree_cap = 0;
  std::vector<std::size_t> dims;  // degrees 0..cap
  std::vector<InvariantRef> invariants;
  std::size_t pairs_tested = 0;
  std::vector<CommutatorRefutation> refutations;
  bool crown_checked = false;
  std::size_t crown_refutations = 0;
  bool crown_consistent = true;
};

/// Commutators of symmetrized invariants of degrees 1..cap modulo U(g)h.
/// A nonzero residue refutes commutativity; none is evidence only.
CommutatorReport commutator_report(const ReductiveSpace &space, unsigned degree_cap, bool with_crown = true);

}  // namespace gospace

#endif

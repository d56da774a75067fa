#pragma once

// The toy object language of the sandbox: propositional formulas over the
// atoms falsum, lam(i) (i >= 1) and identifier letters, plus the marker
// pr(.) (stored as a Box node).  pr(psi) stands for the sentence "psi is
// output by the staged predicate"; to the toy theory it is an opaque
// variable, so scenarios may script proofs about it but nothing derives it.
// Toy formulas are coded in Namespace::Toy.

#include "nwb/enumerate.hpp"
#include "nwb/formula.hpp"

#include <optional>
#include <vector>

namespace nwb
{

[[nodiscard]] Formula lam( int i );
[[nodiscard]] Formula falsum();

// i when f is the atom lam(i).
[[nodiscard]] std::optional< int > lam_index( const Formula& f );

// Indices i of every lam(i) occurring in f, ascending, without duplicates.
[[nodiscard]] std::vector< int > lam_indices( const Formula& f );

// P |-t phi: the conjunction of P implies phi propositionally, every atom
// and pr(.) marker being an opaque variable.
[[nodiscard]] bool taut_consequence( const std::vector< Formula >& P, const Formula& phi );

// Finite unfolding of the arithmetical interpretation:
//   f(p)     = lam(i1) | ... | lam(in) over catalog worlds i in v(p), ascending
//              (false when there are none)
//   f(false) = falsum
//   f(~A), f(A o B) homomorphic
//   f([]C)   = pr(f(C))
// Throws std::invalid_argument for an atom no catalog valuation mentions.
[[nodiscard]] Formula interpret( const Catalog& cat, const Formula& B );

} // namespace nwb

#pragma once

// Propositional reasoning in which atoms and boxed subformulas are opaque
// variables.  Formulas are Tseitin-encoded and decided by a small DPLL solver
// with two watched literals.

#include "nwb/formula.hpp"

#include <unordered_map>
#include <vector>

namespace nwb
{

class PropSolver
{
public:
    PropSolver();

    // Asserts f permanently.
    void add( const Formula& f );

    // Satisfiable together with the extra formulas, which are asserted only
    // for this call.
    [[nodiscard]] bool satisfiable( const std::vector< Formula >& assume = {} );

    [[nodiscard]] std::size_t variables() const { return _assign.size() - 1; }

private:
    using Lit = int; // 2 * var + negated

    std::vector< std::vector< Lit > > _clauses;
    std::vector< std::vector< int > > _watches; // literal -> clause indices watching it
    std::vector< Lit > _units;
    std::vector< signed char > _assign; // per var: -1 free, 0 false, 1 true
    std::vector< Lit > _trail;
    std::unordered_map< Formula, Lit, FormulaHash > _memo;
    Lit _false;
    bool _broken = false; // an empty clause was added

    int new_var();
    Lit encode( const Formula& f );
    void add_clause( std::vector< Lit > c );
    [[nodiscard]] int value( Lit l ) const;
    bool enqueue( Lit l );
    bool propagate( std::size_t& head );
};

[[nodiscard]] bool is_tautology( const Formula& f );
[[nodiscard]] bool entails( const std::vector< Formula >& premises, const Formula& goal );

} // namespace nwb

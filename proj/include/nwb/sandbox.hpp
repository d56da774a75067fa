#pragma once

// Desk-scale model of a staged provability predicate.
//
// A Scenario scripts the proofs of a toy theory.  Every proof has a stage
// (its index); a proof of phi can never have an index below code(phi), so
// the effective stage of an entry is max(declared stage, code(phi)).  P(s),
// the formulas proved at stages <= s, is then automatically inside F_s.
//
// run_h follows the recursion h(0) = 0, h(s+1) = min J_s at the first s
// with J_s nonempty, where J_s = { j >= 1 : P(s) |-t ~lam(j) }.  P changes
// only at effective stages of entries, so h is evaluated only there.
//
// run_g builds the staged predicate g0 / g1.  Before the trigger its output
// is the proof schedule.  On a trigger (s, i) it outputs X u Y (g0) or Z
// (g1), computed from P(s-1) and the catalog model owning world i.

#include "nwb/coding.hpp"
#include "nwb/enumerate.hpp"
#include "nwb/formula.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace nwb
{

using Stage = Code;

class ScenarioError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Scenario
{
    std::vector< Formula > axioms; // ~falsum is always added
    std::map< Stage, Formula > schedule;
    std::vector< std::pair< Stage, Formula > > inject;
    std::optional< Stage > horizon;
};

struct ProofEntry
{
    enum class Source
    {
        Axiom,
        Inject,
        Schedule,
    } source;
    Stage declared;
    Stage stage; // effective
    Formula formula;
};

// Effective entries sorted by (stage, source, declared).  Throws
// ScenarioError when the scenario is ill formed: non-toy formulas, two
// different proofs claiming the same stage, or a scheduled formula that is
// not a tautological consequence of the axioms visible at its stage.
[[nodiscard]] std::vector< ProofEntry > proof_entries( const Scenario& sc );

// Candidate set J_s.  `all` stands for every positive integer (P(s) is
// inconsistent).
struct JSet
{
    bool all = false;
    std::vector< int > members;

    [[nodiscard]] bool empty() const { return !all && members.empty(); }
    [[nodiscard]] int min() const { return all ? 1 : members.front(); }
};

struct Trigger
{
    Stage s;
    int i;
};

struct HTrace
{
    Stage horizon;
    std::optional< Trigger > trigger;
    std::map< Stage, JSet > J; // at every stage where P changes, up to the trigger

    // h(t): 0 up to the trigger stage s, then i.
    [[nodiscard]] int h( const Stage& t ) const;
};

[[nodiscard]] HTrace run_h( const Scenario& sc );

// Formulas with a proof of effective stage <= s.
[[nodiscard]] std::vector< Formula > proved_up_to( const std::vector< ProofEntry >& entries, const Stage& s );

// phi <->_m psi relative to the set P playing the role of P(m).
[[nodiscard]] bool equiv_m( const std::vector< Formula >& P, const Formula& phi, const Formula& psi );

enum class Variant
{
    G0,
    G1,
};

[[nodiscard]] std::string_view name( Variant v );

// The sets of Procedure 2.  X and Y are explicit.  Z is explicit inside the
// universe U of subformulas of P(s-1); outside U a formula belongs to Z iff
// it is a conjunction of two members of Z with code at most s-1, which
// in_z decides recursively.
class Procedure2
{
public:
    Procedure2( Variant v, const Catalog& cat, Trigger trig, std::vector< Formula > P );

    Variant variant;
    Trigger trigger;
    int k;                   // catalog entry owning the trigger world
    Stage bound;             // s - 1
    std::vector< Formula > P; // P(s-1)
    std::vector< Formula > X; // ascending code
    std::vector< Formula > Y;

    // Explicit members of Z with the index n of the first Z_n containing them.
    [[nodiscard]] const std::vector< std::pair< Formula, int > >& z_levels() const { return _z; }

    [[nodiscard]] bool in_x( const Formula& f ) const { return _x.count( f ) > 0; }
    [[nodiscard]] bool in_y( const Formula& f ) const { return _y.count( f ) > 0; }
    [[nodiscard]] bool in_z( const Formula& f ) const;
    [[nodiscard]] std::optional< int > z_level( const Formula& f ) const;

    [[nodiscard]] bool in_output( const Formula& f ) const;

    // The classes of <->_(s-1) with more than one member.
    [[nodiscard]] std::vector< std::vector< Formula > > classes() const;
    // Biconditional members of P as pairs (a, b).
    [[nodiscard]] const std::vector< std::pair< Formula, Formula > >& edges() const { return _edges; }

private:
    std::unordered_map< Formula, int, FormulaHash > _class_of;
    std::vector< std::vector< Formula > > _members;
    std::vector< std::pair< Formula, Formula > > _edges;
    std::unordered_set< Formula, FormulaHash > _x, _y, _universe;
    std::vector< std::pair< Formula, int > > _z;
    std::unordered_map< Formula, int, FormulaHash > _z_index;
    mutable std::unordered_map< Formula, std::optional< int >, FormulaHash > _lazy;

    [[nodiscard]] std::vector< Formula > class_members( const Formula& f ) const;
};

struct GTrace
{
    Variant variant = Variant::G0;
    Logic logic = Logic::EN;
    std::shared_ptr< const Catalog > catalog;
    std::vector< ProofEntry > entries;
    HTrace htrace;
    // Explicit output in order.  For g1 formulas of the lazy tail of Z are
    // output as well but are not listed.
    std::vector< Formula > output;
    std::shared_ptr< const Procedure2 > phase2;

    [[nodiscard]] bool triggered() const { return phase2 != nullptr; }
    [[nodiscard]] bool in_output( const Formula& f ) const;

private:
    std::unordered_set< Formula, FormulaHash > _listed;
    friend GTrace run_g( Variant, const Scenario&, std::shared_ptr< const Catalog > );
};

[[nodiscard]] GTrace run_g( Variant v, const Scenario& sc, std::shared_ptr< const Catalog > cat );

// Adds toy proofs of lam(j) -> f(C) (j in v_k(C)), lam(j) -> ~f(C) (j in
// W_k \ v_k(C)) for every subformula C of every formula in battery, and
// f(C) <-> f(C) for every boxed subformula []C, each at the stage of its own
// code, then ~lam(i) so that h
// fires at i.  Entries already in the scenario other than axioms are moved
// after the seeds.  Throws ScenarioError if i is not in block k or an
// explicit horizon cannot fit the seeds.
[[nodiscard]] Scenario seed_truth_lemma( const Scenario& sc, const Catalog& cat, int k, int i,
                                         const std::vector< Formula >& battery );

} // namespace nwb

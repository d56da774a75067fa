#pragma once

// Per-run checks of the properties a staged predicate is meant to have:
//   E          biconditionals in P(s-1) never separate output membership
//   C          output closed under conjunction below the trigger stage (g1)
//   ConL       falsum is not output
//   ConS       no formula is output together with its negation
//   ECN4       every listed Z member has a witness V in N_k(i) for its
//              lam-pattern (with |-t over P(s-1))
//   TruthLemma i in v_k(B) iff f(B) holds when lam(i) is the only true lam
//              atom and pr(psi) means "psi is output"

#include "nwb/formula.hpp"
#include "nwb/sandbox.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nwb
{

enum class Check
{
    E,
    C,
    ConL,
    ConS,
    ECN4,
    TruthLemma,
};

[[nodiscard]] std::string_view name( Check c );
[[nodiscard]] std::optional< Check > check_from_name( std::string_view s );

enum class Status
{
    Pass,
    Fail,
    NotClaimed,    // the construction does not promise this property
    NotApplicable, // nothing to check in this branch
};

[[nodiscard]] std::string_view name( Status s );

struct CheckReport
{
    Check check;
    Status status;
    std::string detail;
    std::size_t examined = 0;
};

// TruthLemma needs the arguments of verify_truth_lemma; asking for it here
// throws std::invalid_argument.
[[nodiscard]] CheckReport verify_run( const GTrace& t, Check c );

[[nodiscard]] CheckReport verify_truth_lemma( const GTrace& t, int k, int i, const std::vector< Formula >& battery );

// f(B) evaluated in the run: lam(j) is true iff j == i, other atoms are
// false, pr(psi) is true iff psi is output.
[[nodiscard]] bool trace_value( const GTrace& t, int i, const Formula& toy );

} // namespace nwb

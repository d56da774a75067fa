#pragma once

#include "nwb/formula.hpp"
#include "nwb/logic.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nwb
{

enum class Rule : std::uint8_t
{
    Taut, // any propositional tautology, boxed subformulas read as atoms
    AxC,  // []A & []B -> [](A & B)
    AxP,  // ~[]false
    AxD,  // ~([]A & []~A)
    MP,   // from i: A and j: A -> B infer B
    Nec,  // from i: A infer []A
    RE,   // from i: A <-> B infer []A <-> []B
};

[[nodiscard]] std::string_view name( Rule r );
[[nodiscard]] std::optional< Rule > rule_from_name( std::string_view s );

// Whether a logic has the axiom; rules and Taut are available everywhere.
// AxP is also allowed in END, whose theorems include ~[]false.
[[nodiscard]] bool rule_allowed( Logic l, Rule r );

struct Step
{
    Formula formula;
    Rule rule = Rule::Taut;
    int i = -1; // premise indices, 0-based, for MP / Nec / RE
    int j = -1;
};

struct Derivation
{
    Logic logic = Logic::EN;
    std::vector< Step > steps;
};

struct Accepted
{
};

struct Rejected
{
    enum class Kind
    {
        Invalid,      // the step does not follow
        BadIndex,     // premise index out of range or not earlier
        NotPermitted, // axiom not available in the logic
    } kind;
    std::size_t step;
    std::string reason;
};

using DerivationCheck = std::variant< Accepted, Rejected >;

[[nodiscard]] DerivationCheck check_derivation( const Derivation& d );

// Axiom scheme matchers.
[[nodiscard]] bool is_axiom_c( const Formula& f );
[[nodiscard]] bool is_axiom_p( const Formula& f );
[[nodiscard]] bool is_axiom_d( const Formula& f );

} // namespace nwb

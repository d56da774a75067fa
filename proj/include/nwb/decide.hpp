#pragma once

#include "nwb/formula.hpp"
#include "nwb/logic.hpp"
#include "nwb/neighborhood.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace nwb
{

struct Countermodel
{
    Model model;
    World witness; // falsifies the formula
};

// No countermodel with at most `bound` worlds exists.
struct NoCountermodelUpTo
{
    std::int64_t bound;
};

using Verdict = std::variant< Countermodel, NoCountermodelUpTo >;

class ResourceLimit : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Admissible
{
    bool exists = false;
    Family witness;     // least admissible N(x) when exists
    std::string reason; // why none exists otherwise
};

// Is there an N(x) for the logic containing W and every member of T, and
// avoiding every member of F?
[[nodiscard]] Admissible admissible_neighborhood( Logic l, const WorldSet& W, const Family& T, const Family& F );

// WORKBENCH_NODE_BUDGET if set to a positive integer, otherwise 10 million.
[[nodiscard]] std::uint64_t default_node_budget();

// 2^(size of the subformula closure), saturating at INT64_MAX.
[[nodiscard]] std::int64_t default_bound( const Formula& f );

// Iterative deepening over the number of worlds.  Throws ResourceLimit when
// more than node_budget candidates would be examined or the requested size
// cannot be represented.
[[nodiscard]] Verdict search_countermodel( Logic l, const Formula& f, std::int64_t max_worlds,
                                           std::uint64_t node_budget = default_node_budget() );

// Brute force over all frames of the logic with at most max_worlds (<= 3)
// worlds and all valuations of the atoms (<= 3) of f.  Shares no code with
// search_countermodel.  Throws std::invalid_argument outside those limits.
[[nodiscard]] Verdict oracle_validity( Logic l, const Formula& f, int max_worlds );

// Frame condition check for the verdict: the model is an l-frame and the
// witness falsifies f.  Empty string on success.
[[nodiscard]] std::string verify_countermodel( Logic l, const Formula& f, const Countermodel& cm );

} // namespace nwb

#pragma once

// Validity of a formula on a small frame, over all valuations at once.
//
// Worlds are indexed 0..n-1 and neighborhoods are bitmasks over them, so a
// family is a bitset over the 2^n subsets.  A valuation of atoms a_0..a_{m-1}
// is numbered by the bits a_t true at world w <-> bit (t*n + w); the
// evaluator packs 64 consecutive valuations into one machine word.

#include "nwb/formula.hpp"
#include "nwb/neighborhood.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nwb
{

constexpr int max_small_worlds = 6;

struct SmallFrame
{
    int n = 0;
    std::vector< std::uint64_t > N; // N[x] bit S set iff subset S is in N(x)
};

// Worlds of fr are mapped to indices in increasing label order.
[[nodiscard]] SmallFrame compress( const Frame& fr );
// Worlds become 1..n.
[[nodiscard]] Frame expand( const SmallFrame& fr );

class BitEvaluator
{
public:
    // Atoms of f not listed in atoms are false everywhere.
    BitEvaluator( const Formula& f, std::vector< std::string > atoms );

    // Index of the first valuation under which f fails at some world.
    [[nodiscard]] std::optional< std::uint64_t > first_falsifying( const SmallFrame& fr );

    [[nodiscard]] const std::vector< std::string >& atoms() const { return _atoms; }

    // The model over expand(fr) for a valuation index.
    [[nodiscard]] Model model( const SmallFrame& fr, std::uint64_t valuation ) const;

private:
    struct Step
    {
        Op op;
        int a = -1;
        int b = -1;
        int atom = -1; // index into _atoms, -1 if unlisted
    };
    std::vector< std::string > _atoms;
    std::vector< Step > _steps; // post-order; the last step is the formula
    std::vector< std::uint64_t > _slots;
    std::vector< std::uint64_t > _eq;
};

[[nodiscard]] bool valid_in_frame( const Frame& fr, const Formula& f );

} // namespace nwb

#pragma once

#include "nwb/formula.hpp"
#include "nwb/logic.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace nwb
{

using World = int;
using WorldSet = std::set< World >;
using Family = std::set< WorldSet >;

// Stored exactly as given: no closure is applied, so check_frame can report
// raw violations.
struct Frame
{
    WorldSet worlds;
    std::map< World, Family > N;

    friend bool operator==( const Frame&, const Frame& ) = default;
};

// Atoms missing from val are false everywhere.
struct Model
{
    Frame frame;
    std::map< std::string, WorldSet > val;

    friend bool operator==( const Model&, const Model& ) = default;
};

// Throws std::invalid_argument when x is not a world of m.
[[nodiscard]] bool eval( const Model& m, World x, const Formula& f );
[[nodiscard]] WorldSet truth_set( const Model& m, const Formula& f );
[[nodiscard]] WorldSet falsifying_worlds( const Model& m, const Formula& f );

enum class FrameProperty : std::uint8_t
{
    Closure,        // U, V in N(x) implies U & V in N(x)
    Nonempty,       // the empty set is not in N(x)
    ComplementFree, // V in N(x) implies W \ V not in N(x)
};

[[nodiscard]] std::string_view name( FrameProperty p );

struct FrameOk
{
};

struct FrameViolation
{
    World world;
    FrameProperty property;
    std::vector< WorldSet > sets; // the offending members of N(world)
    std::string message;
};

// The EN requirements themselves fail: empty or non-positive world set,
// N undefined somewhere, a neighborhood not inside W, or W missing from N(x).
struct FrameMalformed
{
    std::string message;
};

using FrameCheck = std::variant< FrameOk, FrameViolation, FrameMalformed >;

[[nodiscard]] FrameCheck check_frame( const Frame& fr, Logic l );
[[nodiscard]] inline bool frame_ok( const Frame& fr, Logic l ) { return std::holds_alternative< FrameOk >( check_frame( fr, l ) ); }

// Empty string when the model is well formed: frame passes the EN
// requirements and every valuation lies inside W.
[[nodiscard]] std::string model_problem( const Model& m );

[[nodiscard]] std::string to_string( const WorldSet& s );

} // namespace nwb

#include "nwb/logic.hpp"

namespace nwb
{

std::string_view name( Logic l )
{
    switch ( l )
    {
    case Logic::EN:
        return "EN";
    case Logic::ECN:
        return "ECN";
    case Logic::ENP:
        return "ENP";
    case Logic::END:
        return "END";
    case Logic::ECNP:
        return "ECNP";
    }
    return "?";
}

std::optional< Logic > logic_from_name( std::string_view s )
{
    for ( auto l : all_logics )
        if ( name( l ) == s )
            return l;
    return std::nullopt;
}

namespace
{

// Rows: from, columns: to, in enum order EN ECN ENP END ECNP.
// ENP <= ECNP holds since ECNP proves ~[]false by its own axiom.
constexpr bool inclusion[ 5 ][ 5 ] = {
    { true, true, true, true, true },
    { false, true, false, false, true },
    { false, false, true, true, true },
    { false, false, false, true, false },
    { false, false, false, false, true },
};

} // namespace

bool included( Logic a, Logic b )
{
    return inclusion[ static_cast< int >( a ) ][ static_cast< int >( b ) ];
}

} // namespace nwb

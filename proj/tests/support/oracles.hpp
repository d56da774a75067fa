#pragma once

// Independent reference computations for tests: truth tables with atoms and
// boxed subformulas as opaque variables.

#include "nwb/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace nwb::test
{

inline void opaque_parts( const Formula& f, std::vector< Formula >& out )
{
    if ( f.is( Op::Atom ) || f.is( Op::Box ) )
    {
        if ( std::find( out.begin(), out.end(), f ) == out.end() )
            out.push_back( f );
        return;
    }
    if ( f.is( Op::Not ) )
        opaque_parts( f.child(), out );
    else if ( is_binary( f.op() ) )
    {
        opaque_parts( f.lhs(), out );
        opaque_parts( f.rhs(), out );
    }
}

inline bool table_value( const Formula& f, const std::vector< Formula >& parts, unsigned long row )
{
    switch ( f.op() )
    {
    case Op::Bot:
        return false;
    case Op::Atom:
    case Op::Box:
        return row >> ( std::find( parts.begin(), parts.end(), f ) - parts.begin() ) & 1;
    case Op::Not:
        return !table_value( f.child(), parts, row );
    case Op::And:
        return table_value( f.lhs(), parts, row ) && table_value( f.rhs(), parts, row );
    case Op::Or:
        return table_value( f.lhs(), parts, row ) || table_value( f.rhs(), parts, row );
    case Op::Imp:
        return !table_value( f.lhs(), parts, row ) || table_value( f.rhs(), parts, row );
    }
    return false;
}

inline bool table_entails( const std::vector< Formula >& prem, const Formula& goal )
{
    std::vector< Formula > parts;
    for ( auto& f : prem )
        opaque_parts( f, parts );
    opaque_parts( goal, parts );
    if ( parts.size() > 22 )
        throw std::length_error( "truth table too large" );
    for ( unsigned long row = 0; row < ( 1ul << parts.size() ); ++row )
    {
        bool all = true;
        for ( auto& f : prem )
            all = all && table_value( f, parts, row );
        if ( all && !table_value( goal, parts, row ) )
            return false;
    }
    return true;
}

} // namespace nwb::test

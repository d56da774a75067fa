#include "nwb/toy.hpp"

#include "nwb/propositional.hpp"

#include <algorithm>
#include <stdexcept>

namespace nwb
{

Formula lam( int i )
{
    if ( i < 1 )
        throw std::invalid_argument( "lam index must be positive" );
    return Formula::atom( "lam(" + std::to_string( i ) + ")" );
}

Formula falsum() { return Formula::atom( "falsum" ); }

std::optional< int > lam_index( const Formula& f )
{
    if ( !f.is( Op::Atom ) )
        return std::nullopt;
    const auto& n = f.name();
    if ( n.size() < 6 || n.compare( 0, 4, "lam(" ) != 0 || n.back() != ')' )
        return std::nullopt;
    try
    {
        std::size_t used = 0;
        int i = std::stoi( n.substr( 4, n.size() - 5 ), &used );
        if ( used != n.size() - 5 || i < 1 )
            return std::nullopt;
        return i;
    }
    catch ( const std::exception& )
    {
        return std::nullopt;
    }
}

std::vector< int > lam_indices( const Formula& f )
{
    std::vector< int > out;
    for ( auto& g : subformulas( f ) )
        if ( auto i = lam_index( g ) )
            out.push_back( *i );
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
}

bool taut_consequence( const std::vector< Formula >& P, const Formula& phi ) { return entails( P, phi ); }

namespace
{

Formula interpret_atom( const Catalog& cat, const std::string& p )
{
    bool known = false;
    std::vector< int > worlds;
    for ( auto& e : cat.entries )
    {
        auto it = e.model.val.find( p );
        if ( it == e.model.val.end() )
            continue;
        known = true;
        worlds.insert( worlds.end(), it->second.begin(), it->second.end() );
    }
    if ( !known )
        throw std::invalid_argument( "atom '" + p + "' does not occur in any catalog valuation" );
    std::sort( worlds.begin(), worlds.end() );
    if ( worlds.empty() )
        return Formula::bot();
    Formula out = lam( worlds[ 0 ] );
    for ( std::size_t n = 1; n < worlds.size(); ++n )
        out = Formula::disj( out, lam( worlds[ n ] ) );
    return out;
}

} // namespace

Formula interpret( const Catalog& cat, const Formula& B )
{
    switch ( B.op() )
    {
    case Op::Bot:
        return falsum();
    case Op::Atom:
        return interpret_atom( cat, B.name() );
    case Op::Not:
        return Formula::neg( interpret( cat, B.child() ) );
    case Op::Box:
        return Formula::box( interpret( cat, B.child() ) );
    case Op::And:
        return Formula::conj( interpret( cat, B.lhs() ), interpret( cat, B.rhs() ) );
    case Op::Or:
        return Formula::disj( interpret( cat, B.lhs() ), interpret( cat, B.rhs() ) );
    case Op::Imp:
        return Formula::imp( interpret( cat, B.lhs() ), interpret( cat, B.rhs() ) );
    }
    return B;
}

} // namespace nwb

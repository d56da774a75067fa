#include "nwb/enumerate.hpp"

#include "nwb/coding.hpp"

#include <algorithm>
#include <stdexcept>

namespace nwb
{

Model relabel( const Model& m, World offset )
{
    auto shift = [ & ]( const WorldSet& s ) {
        WorldSet r;
        for ( World w : s )
            r.insert( w + offset );
        return r;
    };
    Model out;
    out.frame.worlds = shift( m.frame.worlds );
    for ( auto& [ x, fam ] : m.frame.N )
    {
        auto& dst = out.frame.N[ x + offset ];
        for ( auto& V : fam )
            dst.insert( shift( V ) );
    }
    for ( auto& [ p, s ] : m.val )
        out.val[ p ] = shift( s );
    return out;
}

namespace
{

// Searches f and appends an entry on the next free block, or a gap record.
void append( Catalog& cat, const Formula& f, const CatalogOptions& opt )
{
    try
    {
        auto v = search_countermodel( cat.logic, f, default_bound( f ), opt.node_budget );
        auto* cm = std::get_if< Countermodel >( &v );
        if ( !cm )
            return;
        const World next = cat.total_worlds() + 1;
        const World n = static_cast< World >( cm->model.frame.worlds.size() );
        CatalogEntry e;
        e.k = static_cast< int >( cat.entries.size() );
        e.formula = f;
        e.lo = next;
        e.hi = next + n - 1;
        e.model = relabel( cm->model, next - 1 );
        e.witness = cm->witness + next - 1;
        cat.entries.push_back( std::move( e ) );
    }
    catch ( const ResourceLimit& ex )
    {
        cat.gaps.push_back( { f, ex.what(), static_cast< int >( cat.entries.size() ) } );
    }
}

} // namespace

Catalog build_catalog( Logic l, int count, const CatalogOptions& opt )
{
    if ( count < 1 )
        throw std::invalid_argument( "catalog size must be at least 1" );
    Catalog cat;
    cat.logic = l;
    for_each_in_code_order( opt.max_symbols, [ & ]( const Formula& f ) {
        append( cat, f, opt );
        return static_cast< int >( cat.entries.size() ) < count;
    } );
    if ( static_cast< int >( cat.entries.size() ) < count )
        throw ResourceLimit( "code order exhausted before " + std::to_string( count ) + " entries were found" );
    return cat;
}

Catalog catalog_of( Logic l, const std::vector< Formula >& formulas, const CatalogOptions& opt )
{
    Catalog cat;
    cat.logic = l;
    for ( auto& f : formulas )
        append( cat, f, opt );
    return cat;
}

std::optional< Owner > world_owner( const Catalog& cat, World i )
{
    auto it = std::lower_bound( cat.entries.begin(), cat.entries.end(), i,
                                []( const CatalogEntry& e, World w ) { return e.hi < w; } );
    if ( it == cat.entries.end() || i < it->lo )
        return std::nullopt;
    return Owner{ it->k, i - it->lo + 1 };
}

} // namespace nwb

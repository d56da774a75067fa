#include "nwb/neighborhood.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nwb
{

namespace
{

class Evaluator
{
    const Model& _m;
    std::unordered_map< Formula, WorldSet, FormulaHash > _memo;

    static WorldSet meet( const WorldSet& a, const WorldSet& b )
    {
        WorldSet r;
        std::set_intersection( a.begin(), a.end(), b.begin(), b.end(), std::inserter( r, r.end() ) );
        return r;
    }

    static WorldSet join( const WorldSet& a, const WorldSet& b )
    {
        WorldSet r;
        std::set_union( a.begin(), a.end(), b.begin(), b.end(), std::inserter( r, r.end() ) );
        return r;
    }

    WorldSet complement( const WorldSet& a ) const
    {
        WorldSet r;
        std::set_difference( _m.frame.worlds.begin(), _m.frame.worlds.end(), a.begin(), a.end(),
                             std::inserter( r, r.end() ) );
        return r;
    }

    WorldSet compute( const Formula& f )
    {
        switch ( f.op() )
        {
        case Op::Bot:
            return {};
        case Op::Atom: {
            auto it = _m.val.find( f.name() );
            return it == _m.val.end() ? WorldSet{} : meet( it->second, _m.frame.worlds );
        }
        case Op::Not:
            return complement( get( f.child() ) );
        case Op::And:
            return meet( get( f.lhs() ), get( f.rhs() ) );
        case Op::Or:
            return join( get( f.lhs() ), get( f.rhs() ) );
        case Op::Imp:
            return join( complement( get( f.lhs() ) ), get( f.rhs() ) );
        case Op::Box: {
            const auto& inner = get( f.child() );
            WorldSet r;
            for ( World x : _m.frame.worlds )
            {
                auto it = _m.frame.N.find( x );
                if ( it != _m.frame.N.end() && it->second.count( inner ) )
                    r.insert( x );
            }
            return r;
        }
        }
        return {};
    }

public:
    explicit Evaluator( const Model& m ) : _m{ m } {}

    const WorldSet& get( const Formula& f )
    {
        if ( auto it = _memo.find( f ); it != _memo.end() )
            return it->second;
        auto r = compute( f );
        return _memo.emplace( f, std::move( r ) ).first->second;
    }
};

bool subset( const WorldSet& a, const WorldSet& b ) { return std::includes( b.begin(), b.end(), a.begin(), a.end() ); }

} // namespace

WorldSet truth_set( const Model& m, const Formula& f ) { return Evaluator{ m }.get( f ); }

bool eval( const Model& m, World x, const Formula& f )
{
    if ( !m.frame.worlds.count( x ) )
        throw std::invalid_argument( "world " + std::to_string( x ) + " is not in the model" );
    return truth_set( m, f ).count( x ) > 0;
}

WorldSet falsifying_worlds( const Model& m, const Formula& f )
{
    auto t = truth_set( m, f );
    WorldSet r;
    std::set_difference( m.frame.worlds.begin(), m.frame.worlds.end(), t.begin(), t.end(), std::inserter( r, r.end() ) );
    return r;
}

std::string_view name( FrameProperty p )
{
    switch ( p )
    {
    case FrameProperty::Closure:
        return "C-closure";
    case FrameProperty::Nonempty:
        return "P-nonempty";
    case FrameProperty::ComplementFree:
        return "D-complementfree";
    }
    return "?";
}

std::string to_string( const WorldSet& s )
{
    std::string out = "{";
    for ( auto it = s.begin(); it != s.end(); ++it )
    {
        if ( it != s.begin() )
            out += ',';
        out += std::to_string( *it );
    }
    return out + "}";
}

FrameCheck check_frame( const Frame& fr, Logic l )
{
    const auto& W = fr.worlds;
    if ( W.empty() )
        return FrameMalformed{ "the set of worlds is empty" };
    if ( *W.begin() <= 0 )
        return FrameMalformed{ "world labels must be positive, found " + std::to_string( *W.begin() ) };
    for ( auto& [ x, fam ] : fr.N )
        if ( !W.count( x ) )
            return FrameMalformed{ "N is defined at " + std::to_string( x ) + ", which is not a world" };
    for ( World x : W )
    {
        auto it = fr.N.find( x );
        if ( it == fr.N.end() )
            return FrameMalformed{ "N(" + std::to_string( x ) + ") is undefined" };
        for ( auto& V : it->second )
            if ( !subset( V, W ) )
                return FrameMalformed{ "N(" + std::to_string( x ) + ") contains " + to_string( V ) +
                                       ", which is not a set of worlds" };
        if ( !it->second.count( W ) )
            return FrameMalformed{ "W is missing from N(" + std::to_string( x ) + ")" };
    }

    for ( World x : W )
    {
        const auto& fam = fr.N.at( x );
        auto where = "N(" + std::to_string( x ) + ")";
        if ( has_nonempty( l ) && fam.count( WorldSet{} ) )
            return FrameViolation{ x, FrameProperty::Nonempty, { WorldSet{} }, where + " contains the empty set" };
        if ( has_closure( l ) )
        {
            for ( auto& U : fam )
                for ( auto& V : fam )
                {
                    if ( !( U < V ) )
                        continue;
                    WorldSet I;
                    std::set_intersection( U.begin(), U.end(), V.begin(), V.end(), std::inserter( I, I.end() ) );
                    if ( !fam.count( I ) )
                        return FrameViolation{ x, FrameProperty::Closure, { U, V },
                                               where + " contains " + to_string( U ) + " and " + to_string( V ) +
                                                   " but not their intersection " + to_string( I ) };
                }
        }
        if ( has_complement_free( l ) )
        {
            for ( auto& V : fam )
            {
                WorldSet C;
                std::set_difference( W.begin(), W.end(), V.begin(), V.end(), std::inserter( C, C.end() ) );
                if ( fam.count( C ) )
                    return FrameViolation{ x, FrameProperty::ComplementFree, { V, C },
                                           where + " contains both " + to_string( V ) + " and its complement " +
                                               to_string( C ) };
            }
        }
    }
    return FrameOk{};
}

std::string model_problem( const Model& m )
{
    auto c = check_frame( m.frame, Logic::EN );
    if ( auto* bad = std::get_if< FrameMalformed >( &c ) )
        return bad->message;
    for ( auto& [ p, s ] : m.val )
        if ( !subset( s, m.frame.worlds ) )
            return "valuation of " + p + " is not a set of worlds";
    return {};
}

} // namespace nwb

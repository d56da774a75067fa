#include "nwb/decide.hpp"

#include "nwb/coding.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <unordered_map>

namespace nwb
{

namespace
{

using Mask = std::uint64_t;

void sort_unique( std::vector< Mask >& v )
{
    std::sort( v.begin(), v.end() );
    v.erase( std::unique( v.begin(), v.end() ), v.end() );
}

bool contains( const std::vector< Mask >& sorted, Mask m ) { return std::binary_search( sorted.begin(), sorted.end(), m ); }

std::vector< Mask > intersection_closure( std::vector< Mask > fam )
{
    sort_unique( fam );
    for ( bool grew = true; grew; )
    {
        grew = false;
        const auto size = fam.size();
        for ( std::size_t i = 0; i < size; ++i )
            for ( std::size_t j = i + 1; j < size; ++j )
            {
                Mask m = fam[ i ] & fam[ j ];
                if ( !contains( fam, m ) && std::find( fam.begin() + size, fam.end(), m ) == fam.end() )
                {
                    fam.push_back( m );
                    grew = true;
                }
            }
        sort_unique( fam );
    }
    return fam;
}

struct MaskVerdict
{
    bool ok = false;
    std::vector< Mask > family;
    // What went wrong, as masks, for the public reporting wrapper.
    enum class Why
    {
        None,
        InAndOut,
        EmptyRequired,
        Complementary,
        ClosureExcluded,
        ClosureEmpty,
    } why = Why::None;
    Mask a = 0;
    Mask b = 0;
};

// T must already contain W.
MaskVerdict admissible_masks( Logic l, Mask W, std::vector< Mask > T, const std::vector< Mask >& F )
{
    MaskVerdict r;
    sort_unique( T );
    if ( has_closure( l ) )
    {
        auto cl = intersection_closure( T );
        for ( Mask f : F )
            if ( contains( cl, f ) )
            {
                r.why = contains( T, f ) ? MaskVerdict::Why::InAndOut : MaskVerdict::Why::ClosureExcluded;
                r.a = f;
                return r;
            }
        if ( has_nonempty( l ) && contains( cl, 0 ) )
        {
            r.why = contains( T, 0 ) ? MaskVerdict::Why::EmptyRequired : MaskVerdict::Why::ClosureEmpty;
            return r;
        }
        r.ok = true;
        r.family = std::move( cl );
        return r;
    }
    for ( Mask f : F )
        if ( contains( T, f ) )
        {
            r.why = MaskVerdict::Why::InAndOut;
            r.a = f;
            return r;
        }
    if ( has_nonempty( l ) && contains( T, 0 ) )
    {
        r.why = MaskVerdict::Why::EmptyRequired;
        return r;
    }
    if ( has_complement_free( l ) )
        for ( Mask t : T )
            if ( contains( T, W & ~t ) )
            {
                r.why = MaskVerdict::Why::Complementary;
                r.a = t;
                r.b = W & ~t;
                return r;
            }
    r.ok = true;
    r.family = std::move( T );
    return r;
}

} // namespace

Admissible admissible_neighborhood( Logic l, const WorldSet& W, const Family& T, const Family& F )
{
    if ( W.size() > 64 )
        throw std::invalid_argument( "at most 64 worlds supported" );
    std::vector< World > label( W.begin(), W.end() );
    auto to_mask = [ & ]( const WorldSet& s ) {
        Mask m = 0;
        for ( World w : s )
        {
            auto it = std::lower_bound( label.begin(), label.end(), w );
            if ( it == label.end() || *it != w )
                throw std::invalid_argument( "set " + to_string( s ) + " is not inside W" );
            m |= Mask{ 1 } << ( it - label.begin() );
        }
        return m;
    };
    auto to_set = [ & ]( Mask m ) {
        WorldSet s;
        for ( std::size_t i = 0; i < label.size(); ++i )
            if ( ( m >> i ) & 1 )
                s.insert( label[ i ] );
        return s;
    };

    Mask all = to_mask( W );
    std::vector< Mask > t{ all };
    for ( auto& s : T )
        t.push_back( to_mask( s ) );
    std::vector< Mask > f;
    for ( auto& s : F )
        f.push_back( to_mask( s ) );

    auto v = admissible_masks( l, all, t, f );
    Admissible out;
    if ( v.ok )
    {
        out.exists = true;
        for ( Mask m : v.family )
            out.witness.insert( to_set( m ) );
        return out;
    }
    switch ( v.why )
    {
    case MaskVerdict::Why::InAndOut:
        out.reason = to_string( to_set( v.a ) ) + " is required both in and out of N(x)";
        break;
    case MaskVerdict::Why::EmptyRequired:
        out.reason = "the empty set is required in N(x)";
        break;
    case MaskVerdict::Why::Complementary:
        out.reason = to_string( to_set( v.a ) ) + " and its complement " + to_string( to_set( v.b ) ) +
                     " are both required";
        break;
    case MaskVerdict::Why::ClosureExcluded:
        out.reason = "the intersection closure contains the excluded set " + to_string( to_set( v.a ) );
        break;
    case MaskVerdict::Why::ClosureEmpty:
        out.reason = "the intersection closure contains the empty set";
        break;
    case MaskVerdict::Why::None:
        break;
    }
    return out;
}

std::uint64_t default_node_budget()
{
    if ( const char* env = std::getenv( "WORKBENCH_NODE_BUDGET" ) )
    {
        char* end = nullptr;
        auto v = std::strtoull( env, &end, 10 );
        if ( end != env && *end == '\0' && v > 0 )
            return v;
    }
    return 10'000'000;
}

std::int64_t default_bound( const Formula& f )
{
    auto c = subformulas( f ).size();
    if ( c >= 63 )
        return INT64_MAX;
    return std::int64_t{ 1 } << c;
}

namespace
{

class Search
{
    Logic _l;
    Formula _f;
    std::uint64_t _budget;
    std::uint64_t _nodes = 0;

    std::vector< Formula > _cl;
    std::vector< Mask > _types;   // bit j: closure member j true
    std::vector< int > _boxes;    // closure indices of boxed members
    std::vector< int > _box_arg;  // closure index of each box's operand
    std::vector< std::string > _atoms;
    std::vector< int > _atom_idx;
    int _top = 0;

    std::vector< int > _tuple;
    std::vector< std::vector< Mask > > _families;

    void tick()
    {
        if ( ++_nodes > _budget )
            throw ResourceLimit( "node budget of " + std::to_string( _budget ) + " exhausted" );
    }

    bool falsifies( int type ) const { return !( ( _types[ type ] >> _top ) & 1 ); }

    // Checks the complete tuple; fills _families on success.
    bool admissible_tuple()
    {
        const int n = static_cast< int >( _tuple.size() );
        const Mask W = n == 64 ? ~Mask{ 0 } : ( Mask{ 1 } << n ) - 1;
        std::vector< Mask > truth( _boxes.size(), 0 );
        for ( std::size_t b = 0; b < _boxes.size(); ++b )
            for ( int x = 0; x < n; ++x )
                if ( ( _types[ _tuple[ x ] ] >> _box_arg[ b ] ) & 1 )
                    truth[ b ] |= Mask{ 1 } << x;
        _families.assign( n, {} );
        std::vector< Mask > T, F;
        for ( int x = 0; x < n; ++x )
        {
            T.assign( 1, W );
            F.clear();
            for ( std::size_t b = 0; b < _boxes.size(); ++b )
                ( ( ( _types[ _tuple[ x ] ] >> _boxes[ b ] ) & 1 ) ? T : F ).push_back( truth[ b ] );
            auto v = admissible_masks( _l, W, T, F );
            if ( !v.ok )
                return false;
            _families[ x ] = std::move( v.family );
        }
        return true;
    }

    bool extend( std::size_t n, int from, bool has_false )
    {
        tick();
        if ( _tuple.size() == n )
            return has_false && admissible_tuple();
        const int types = static_cast< int >( _types.size() );
        const bool last = _tuple.size() + 1 == n;
        for ( int t = from; t < types; ++t )
        {
            // The final slot must supply a falsifying world if none exists yet.
            if ( last && !has_false && !falsifies( t ) )
                continue;
            _tuple.push_back( t );
            if ( extend( n, t, has_false || falsifies( t ) ) )
                return true;
            _tuple.pop_back();
        }
        return false;
    }

    Countermodel materialize() const
    {
        const int n = static_cast< int >( _tuple.size() );
        auto to_set = [ & ]( Mask m ) {
            WorldSet s;
            for ( int i = 0; i < n; ++i )
                if ( ( m >> i ) & 1 )
                    s.insert( i + 1 );
            return s;
        };
        Countermodel cm;
        for ( int x = 0; x < n; ++x )
        {
            cm.model.frame.worlds.insert( x + 1 );
            auto& fam = cm.model.frame.N[ x + 1 ];
            for ( Mask m : _families[ x ] )
                fam.insert( to_set( m ) );
        }
        for ( std::size_t a = 0; a < _atoms.size(); ++a )
        {
            auto& s = cm.model.val[ _atoms[ a ] ];
            for ( int x = 0; x < n; ++x )
                if ( ( _types[ _tuple[ x ] ] >> _atom_idx[ a ] ) & 1 )
                    s.insert( x + 1 );
        }
        cm.witness = 0;
        for ( int x = 0; x < n && !cm.witness; ++x )
            if ( falsifies( _tuple[ x ] ) )
                cm.witness = x + 1;
        return cm;
    }

public:
    Search( Logic l, Formula f, std::uint64_t budget ) : _l{ l }, _f{ std::move( f ) }, _budget{ budget }
    {
        _cl = subformula_closure( _f );
        if ( _cl.size() > 64 )
            throw ResourceLimit( "formula has more than 64 subformulas" );
        std::unordered_map< Formula, int, FormulaHash > index;
        for ( std::size_t j = 0; j < _cl.size(); ++j )
            index.emplace( _cl[ j ], static_cast< int >( j ) );
        _top = index.at( _f );

        std::vector< int > free;
        for ( std::size_t j = 0; j < _cl.size(); ++j )
        {
            const auto& g = _cl[ j ];
            if ( g.is( Op::Atom ) )
            {
                free.push_back( static_cast< int >( j ) );
                _atoms.push_back( g.name() );
                _atom_idx.push_back( static_cast< int >( j ) );
            }
            else if ( g.is( Op::Box ) )
            {
                free.push_back( static_cast< int >( j ) );
                _boxes.push_back( static_cast< int >( j ) );
                _box_arg.push_back( index.at( g.child() ) );
            }
        }
        if ( free.size() > 20 )
            throw ResourceLimit( "more than 20 atoms and boxed subformulas" );

        std::vector< int > pos( _cl.size(), -1 );
        for ( std::size_t p = 0; p < free.size(); ++p )
            pos[ free[ p ] ] = static_cast< int >( p );
        for ( Mask a = 0; a < ( Mask{ 1 } << free.size() ); ++a )
        {
            tick();
            Mask t = 0;
            auto bit = [ & ]( const Formula& g ) { return ( t >> index.at( g ) ) & 1; };
            for ( std::size_t j = 0; j < _cl.size(); ++j )
            {
                const auto& g = _cl[ j ];
                Mask v = 0;
                switch ( g.op() )
                {
                case Op::Bot:
                    v = 0;
                    break;
                case Op::Atom:
                case Op::Box:
                    v = ( a >> pos[ j ] ) & 1;
                    break;
                case Op::Not:
                    v = !bit( g.child() );
                    break;
                case Op::And:
                    v = bit( g.lhs() ) & bit( g.rhs() );
                    break;
                case Op::Or:
                    v = bit( g.lhs() ) | bit( g.rhs() );
                    break;
                case Op::Imp:
                    v = Mask{ !bit( g.lhs() ) } | bit( g.rhs() );
                    break;
                }
                t |= v << j;
            }
            _types.push_back( t );
        }
    }

    Verdict run( std::int64_t max_worlds )
    {
        bool any_false = false;
        for ( std::size_t t = 0; t < _types.size(); ++t )
            any_false = any_false || falsifies( static_cast< int >( t ) );
        if ( !any_false )
            return NoCountermodelUpTo{ max_worlds }; // propositionally valid
        // Worlds of equal type can be merged, so a countermodel never needs
        // more worlds than there are types.
        const auto cap = std::min< std::int64_t >( max_worlds, static_cast< std::int64_t >( _types.size() ) );
        for ( std::int64_t n = 1; n <= cap; ++n )
        {
            if ( n > 64 )
                throw ResourceLimit( "search beyond 64 worlds is not supported" );
            _tuple.clear();
            if ( extend( static_cast< std::size_t >( n ), 0, false ) )
                return materialize();
        }
        return NoCountermodelUpTo{ max_worlds };
    }
};

} // namespace

Verdict search_countermodel( Logic l, const Formula& f, std::int64_t max_worlds, std::uint64_t node_budget )
{
    if ( max_worlds < 1 )
        throw std::invalid_argument( "the world bound must be at least 1" );
    auto v = Search{ l, f, node_budget }.run( max_worlds );
    if ( auto* cm = std::get_if< Countermodel >( &v ) )
    {
        auto problem = verify_countermodel( l, f, *cm );
        if ( !problem.empty() )
            throw std::logic_error( "materialized countermodel does not verify: " + problem );
    }
    return v;
}

std::string verify_countermodel( Logic l, const Formula& f, const Countermodel& cm )
{
    if ( auto p = model_problem( cm.model ); !p.empty() )
        return p;
    auto c = check_frame( cm.model.frame, l );
    if ( auto* v = std::get_if< FrameViolation >( &c ) )
        return "not an " + std::string( name( l ) ) + "-frame: " + v->message;
    if ( !cm.model.frame.worlds.count( cm.witness ) )
        return "witness " + std::to_string( cm.witness ) + " is not a world";
    if ( eval( cm.model, cm.witness, f ) )
        return "formula holds at the witness " + std::to_string( cm.witness );
    return {};
}

} // namespace nwb

#include "nwb/frame_validity.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nwb
{

namespace
{

// Lane patterns: lane l of word j has bit b of its valuation index set.
constexpr std::uint64_t lane_bit[ 6 ] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

} // namespace

SmallFrame compress( const Frame& fr )
{
    const int n = static_cast< int >( fr.worlds.size() );
    if ( n < 1 || n > max_small_worlds )
        throw std::invalid_argument( "frame too large for bit evaluation" );
    std::map< World, int > index;
    for ( World w : fr.worlds )
        index.emplace( w, static_cast< int >( index.size() ) );
    SmallFrame out{ n, std::vector< std::uint64_t >( n, 0 ) };
    for ( auto& [ x, fam ] : fr.N )
    {
        auto xi = index.find( x );
        if ( xi == index.end() )
            continue;
        for ( auto& V : fam )
        {
            unsigned mask = 0;
            for ( World w : V )
                mask |= 1u << index.at( w );
            out.N[ xi->second ] |= 1ULL << mask;
        }
    }
    return out;
}

Frame expand( const SmallFrame& fr )
{
    Frame out;
    for ( int w = 0; w < fr.n; ++w )
        out.worlds.insert( w + 1 );
    for ( int x = 0; x < fr.n; ++x )
    {
        auto& fam = out.N[ x + 1 ];
        for ( unsigned S = 0; S < ( 1u << fr.n ); ++S )
        {
            if ( !( ( fr.N[ x ] >> S ) & 1 ) )
                continue;
            WorldSet V;
            for ( int w = 0; w < fr.n; ++w )
                if ( ( S >> w ) & 1 )
                    V.insert( w + 1 );
            fam.insert( std::move( V ) );
        }
    }
    return out;
}

BitEvaluator::BitEvaluator( const Formula& f, std::vector< std::string > atoms ) : _atoms{ std::move( atoms ) }
{
    std::unordered_map< Formula, int, FormulaHash > index;
    for ( auto& g : subformulas( f ) )
    {
        Step s{ g.op() };
        if ( g.op() == Op::Atom )
        {
            auto it = std::find( _atoms.begin(), _atoms.end(), g.name() );
            s.atom = it == _atoms.end() ? -1 : static_cast< int >( it - _atoms.begin() );
        }
        else if ( is_unary( g.op() ) )
            s.a = index.at( g.child() );
        else if ( is_binary( g.op() ) )
        {
            s.a = index.at( g.lhs() );
            s.b = index.at( g.rhs() );
        }
        index.emplace( g, static_cast< int >( _steps.size() ) );
        _steps.push_back( s );
    }
}

std::optional< std::uint64_t > BitEvaluator::first_falsifying( const SmallFrame& fr )
{
    const int n = fr.n;
    const int bits = static_cast< int >( _atoms.size() ) * n;
    if ( bits > 30 )
        throw std::invalid_argument( "too many valuations for exhaustive evaluation" );
    const std::uint64_t total = 1ULL << bits;
    const std::uint64_t chunks = total > 64 ? total / 64 : 1;
    const std::uint64_t live = total >= 64 ? ~0ULL : ( 1ULL << total ) - 1;
    const unsigned subsets = 1u << n;

    _slots.assign( _steps.size() * n, 0 );
    _eq.assign( subsets, 0 );

    for ( std::uint64_t chunk = 0; chunk < chunks; ++chunk )
    {
        for ( std::size_t k = 0; k < _steps.size(); ++k )
        {
            const Step& s = _steps[ k ];
            std::uint64_t* out = &_slots[ k * n ];
            const std::uint64_t* a = s.a >= 0 ? &_slots[ s.a * n ] : nullptr;
            const std::uint64_t* b = s.b >= 0 ? &_slots[ s.b * n ] : nullptr;
            switch ( s.op )
            {
            case Op::Bot:
                std::fill( out, out + n, 0 );
                break;
            case Op::Atom:
                for ( int w = 0; w < n; ++w )
                {
                    if ( s.atom < 0 )
                    {
                        out[ w ] = 0;
                        continue;
                    }
                    int bit = s.atom * n + w;
                    out[ w ] = bit < 6 ? lane_bit[ bit ] : ( ( chunk >> ( bit - 6 ) ) & 1 ) ? ~0ULL : 0;
                }
                break;
            case Op::Not:
                for ( int w = 0; w < n; ++w )
                    out[ w ] = ~a[ w ];
                break;
            case Op::And:
                for ( int w = 0; w < n; ++w )
                    out[ w ] = a[ w ] & b[ w ];
                break;
            case Op::Or:
                for ( int w = 0; w < n; ++w )
                    out[ w ] = a[ w ] | b[ w ];
                break;
            case Op::Imp:
                for ( int w = 0; w < n; ++w )
                    out[ w ] = ~a[ w ] | b[ w ];
                break;
            case Op::Box:
                // eq[S]: lanes where the truth set of the operand is exactly S.
                for ( unsigned S = 0; S < subsets; ++S )
                {
                    std::uint64_t e = ~0ULL;
                    for ( int w = 0; w < n; ++w )
                        e &= ( ( S >> w ) & 1 ) ? a[ w ] : ~a[ w ];
                    _eq[ S ] = e;
                }
                for ( int x = 0; x < n; ++x )
                {
                    std::uint64_t r = 0;
                    for ( std::uint64_t fam = fr.N[ x ]; fam; fam &= fam - 1 )
                        r |= _eq[ __builtin_ctzll( fam ) ];
                    out[ x ] = r;
                }
                break;
            }
        }
        const std::uint64_t* top = &_slots[ ( _steps.size() - 1 ) * n ];
        std::uint64_t bad = 0;
        for ( int w = 0; w < n; ++w )
            bad |= ~top[ w ];
        bad &= live;
        if ( bad )
            return chunk * 64 + static_cast< std::uint64_t >( __builtin_ctzll( bad ) );
    }
    return std::nullopt;
}

Model BitEvaluator::model( const SmallFrame& fr, std::uint64_t valuation ) const
{
    Model m{ expand( fr ), {} };
    for ( std::size_t t = 0; t < _atoms.size(); ++t )
    {
        auto& s = m.val[ _atoms[ t ] ];
        for ( int w = 0; w < fr.n; ++w )
            if ( ( valuation >> ( t * fr.n + w ) ) & 1 )
                s.insert( w + 1 );
    }
    return m;
}

bool valid_in_frame( const Frame& fr, const Formula& f )
{
    BitEvaluator ev{ f, atoms_of( f ) };
    return !ev.first_falsifying( compress( fr ) );
}

} // namespace nwb

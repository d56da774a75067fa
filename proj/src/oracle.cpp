// Exhaustive small-frame oracle.  Deliberately naive: every frame, every
// valuation, evaluated by the bit-sliced frame evaluator.

#include "nwb/decide.hpp"
#include "nwb/frame_validity.hpp"

namespace nwb
{

namespace
{

// All neighborhood families over n worlds that contain W and satisfy the
// per-world condition of l, in increasing bit order.
std::vector< std::uint64_t > families( Logic l, int n )
{
    const unsigned subsets = 1u << n;
    const unsigned full = subsets - 1;
    std::vector< std::uint64_t > out;
    for ( std::uint64_t rest = 0; rest < ( std::uint64_t{ 1 } << ( subsets - 1 ) ); ++rest )
    {
        std::uint64_t fam = rest | ( std::uint64_t{ 1 } << full );
        auto in = [ & ]( unsigned s ) { return ( fam >> s ) & 1; };
        bool ok = true;
        if ( has_nonempty( l ) && in( 0 ) )
            ok = false;
        for ( unsigned s = 0; ok && s < subsets; ++s )
        {
            if ( !in( s ) )
                continue;
            if ( has_complement_free( l ) && in( full & ~s ) )
                ok = false;
            for ( unsigned t = 0; ok && has_closure( l ) && t < subsets; ++t )
                if ( in( t ) && !in( s & t ) )
                    ok = false;
        }
        if ( ok )
            out.push_back( fam );
    }
    return out;
}

} // namespace

Verdict oracle_validity( Logic l, const Formula& f, int max_worlds )
{
    if ( max_worlds < 1 || max_worlds > 3 )
        throw std::invalid_argument( "oracle bound must be between 1 and 3" );
    auto atoms = atoms_of( f );
    if ( atoms.size() > 3 )
        throw std::invalid_argument( "oracle accepts at most 3 atoms" );
    BitEvaluator ev{ f, atoms };
    for ( int n = 1; n <= max_worlds; ++n )
    {
        auto fams = families( l, n );
        std::vector< std::size_t > pick( n, 0 );
        SmallFrame fr{ n, std::vector< std::uint64_t >( n ) };
        for ( ;; )
        {
            for ( int x = 0; x < n; ++x )
                fr.N[ x ] = fams[ pick[ x ] ];
            if ( auto v = ev.first_falsifying( fr ) )
            {
                Countermodel cm{ ev.model( fr, *v ), 0 };
                cm.witness = *falsifying_worlds( cm.model, f ).begin();
                return cm;
            }
            int x = n - 1;
            while ( x >= 0 && ++pick[ x ] == fams.size() )
                pick[ x-- ] = 0;
            if ( x < 0 )
                break;
        }
    }
    return NoCountermodelUpTo{ max_worlds };
}

} // namespace nwb

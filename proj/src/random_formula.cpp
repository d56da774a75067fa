#include "nwb/random_formula.hpp"

#include <stdexcept>

namespace nwb
{

RandomFormula::RandomFormula( std::uint64_t seed, RandomFormulaOptions opt ) : _rng( seed ), _opt( std::move( opt ) )
{
    if ( _opt.atoms.empty() && !_opt.allow_bot )
        throw std::invalid_argument( "no leaves to generate from" );
}

Formula RandomFormula::leaf()
{
    std::size_t n = _opt.atoms.size() + ( _opt.allow_bot ? 1 : 0 );
    std::size_t r = std::uniform_int_distribution< std::size_t >( 0, n - 1 )( _rng );
    if ( r == _opt.atoms.size() )
        return Formula::bot();
    return Formula::atom( _opt.atoms[ r ] );
}

Formula RandomFormula::gen( int depth, int modal, int& budget )
{
    if ( depth <= 1 || budget == 0 )
        return leaf();
    // Leaves get a fixed share so that small trees stay common.
    int r = std::uniform_int_distribution< int >( 0, 9 )( _rng );
    if ( r < 3 )
        return leaf();
    bool box_ok = _opt.max_modal_depth < 0 || modal < _opt.max_modal_depth;
    if ( budget > 0 )
        --budget;
    switch ( r )
    {
    case 3:
        return Formula::neg( gen( depth - 1, modal, budget ) );
    case 4:
    case 5:
        if ( box_ok )
            return Formula::box( gen( depth - 1, modal + 1, budget ) );
        return Formula::neg( gen( depth - 1, modal, budget ) );
    case 6: {
        auto a = gen( depth - 1, modal, budget );
        return Formula::conj( a, gen( depth - 1, modal, budget ) );
    }
    case 7: {
        auto a = gen( depth - 1, modal, budget );
        return Formula::disj( a, gen( depth - 1, modal, budget ) );
    }
    default: {
        auto a = gen( depth - 1, modal, budget );
        return Formula::imp( a, gen( depth - 1, modal, budget ) );
    }
    }
}

Formula RandomFormula::next()
{
    int budget = _opt.max_connectives;
    return gen( _opt.max_depth + 1, 0, budget );
}

} // namespace nwb

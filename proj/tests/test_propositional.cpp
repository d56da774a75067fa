#include "oracles.hpp"

#include "nwb/parser.hpp"
#include "nwb/propositional.hpp"
#include "nwb/random_formula.hpp"

#include <doctest.h>

using namespace nwb;

using test::table_entails;

TEST_CASE( "tautologies with opaque boxes" )
{
    CHECK( is_tautology( parse( "p -> p" ) ) );
    CHECK( is_tautology( parse( "[]p | ~[]p" ) ) );
    CHECK( is_tautology( parse( "true" ) ) );
    CHECK_FALSE( is_tautology( parse( "[]p -> [](p & p)" ) ) );
    CHECK_FALSE( is_tautology( parse( "false" ) ) );
    CHECK( is_tautology( parse( "(p -> q) -> (~q -> ~p)" ) ) );
    CHECK( entails( { parse( "p" ), parse( "p -> q" ) }, parse( "q" ) ) );
    CHECK_FALSE( entails( {}, parse( "q" ) ) );
    CHECK( entails( { parse( "p" ), parse( "~p" ) }, parse( "q" ) ) );
}

TEST_CASE( "solver agrees with truth tables" )
{
    RandomFormulaOptions opt;
    opt.atoms = { "p", "q", "r", "s" };
    opt.max_depth = 5;
    RandomFormula gen( 99, opt );
    for ( int n = 0; n < 400; ++n )
    {
        std::vector< Formula > prem;
        for ( int k = 0; k < n % 4; ++k )
            prem.push_back( gen.next() );
        auto goal = gen.next();
        CHECK_MESSAGE( entails( prem, goal ) == table_entails( prem, goal ), render( goal ) );
    }
}

TEST_CASE( "incremental solver keeps assumptions local" )
{
    PropSolver s;
    s.add( parse( "p | q" ) );
    CHECK( s.satisfiable() );
    CHECK( s.satisfiable( { parse( "~p" ) } ) );
    CHECK_FALSE( s.satisfiable( { parse( "~p" ), parse( "~q" ) } ) );
    CHECK( s.satisfiable( { parse( "~q" ) } ) );
    s.add( parse( "~p" ) );
    CHECK_FALSE( s.satisfiable( { parse( "~q" ) } ) );
    CHECK( s.satisfiable() );
    s.add( parse( "false" ) );
    CHECK_FALSE( s.satisfiable() );
}

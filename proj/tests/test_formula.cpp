#include "nwb/coding.hpp"
#include "nwb/parser.hpp"
#include "nwb/random_formula.hpp"

#include <doctest.h>

#include <set>

using namespace nwb;

namespace
{

Formula p() { return Formula::atom( "p" ); }
Formula q() { return Formula::atom( "q" ); }
Formula r() { return Formula::atom( "r" ); }

} // namespace

TEST_CASE( "parse builds the expected trees" )
{
    using F = Formula;
    CHECK( parse( "[]p & []q -> [](p & q)" ) == F::imp( F::conj( F::box( p() ), F::box( q() ) ), F::box( F::conj( p(), q() ) ) ) );
    CHECK( parse( "~[]false" ) == F::neg( F::box( F::bot() ) ) );
    CHECK( parse( "p <-> p" ) == F::conj( F::imp( p(), p() ), F::imp( p(), p() ) ) );
    CHECK( parse( "true" ) == F::neg( F::bot() ) );
    CHECK( parse( "p -> q -> r" ) == F::imp( p(), F::imp( q(), r() ) ) );
    CHECK( parse( "p & q | r" ) == F::disj( F::conj( p(), q() ), r() ) );
    CHECK( parse( "p | q & r" ) == F::disj( p(), F::conj( q(), r() ) ) );
    CHECK( parse( "~p & q" ) == F::conj( F::neg( p() ), q() ) );
    CHECK( parse( "[]~[]p" ) == F::box( F::neg( F::box( p() ) ) ) );
    CHECK( parse( "p | q -> r" ) == F::imp( F::disj( p(), q() ), r() ) );
    CHECK( parse( "p <-> q <-> r" ) == F::iff( F::iff( p(), q() ), r() ) );
    CHECK( parse( "p -> q <-> r" ) == F::iff( F::imp( p(), q() ), r() ) );
    CHECK( parse( "  (( p ))  " ) == p() );
    CHECK( parse( "x_1Y" ) == F::atom( "x_1Y" ) );
}

TEST_CASE( "parse errors carry a position" )
{
    auto fails_at = []( const char* text, std::size_t pos ) {
        try
        {
            (void)parse( text );
        }
        catch ( const ParseError& e )
        {
            CHECK_MESSAGE( e.position() == pos, text );
            return;
        }
        FAIL( "accepted " << text );
    };
    fails_at( "p &", 3 );
    fails_at( "(p", 2 );
    fails_at( "p q", 2 );
    fails_at( "", 0 );
    fails_at( "P", 0 );
    fails_at( "p -> ", 5 );
    fails_at( "[p", 0 );
    CHECK_THROWS_AS( (void)parse( "lam(1)" ), ParseError );
    CHECK_THROWS_AS( (void)parse( "lam(0)", Namespace::Toy ), ParseError );
    CHECK_THROWS_AS( (void)parse( "lam(01)", Namespace::Toy ), ParseError );
    CHECK_THROWS_AS( (void)parse( "pr", Namespace::Toy ), ParseError );
    CHECK_NOTHROW( (void)parse( "lam(12) -> ~pr(falsum)", Namespace::Toy ) );
}

TEST_CASE( "render uses minimal parentheses" )
{
    CHECK( render( parse( "p -> (q -> r)" ) ) == "p -> q -> r" );
    CHECK( render( parse( "(p -> q) -> r" ) ) == "(p -> q) -> r" );
    CHECK( render( parse( "(p & q) | r" ) ) == "p & q | r" );
    CHECK( render( parse( "p & (q | r)" ) ) == "p & (q | r)" );
    CHECK( render( parse( "~(p & q)" ) ) == "~(p & q)" );
    CHECK( render( parse( "[]false" ) ) == "[]false" );
    CHECK( render( parse( "lam(3) -> pr(~falsum)", Namespace::Toy ), Namespace::Toy ) == "lam(3) -> pr(~falsum)" );
}

TEST_CASE( "render and parse round trip on random formulas" )
{
    RandomFormulaOptions opt;
    opt.atoms = { "p", "q", "r", "long_name9" };
    opt.max_depth = 6;
    RandomFormula gen( 7, opt );
    std::set< std::string > texts;
    std::set< Code > codes;
    for ( int n = 0; n < 1000; ++n )
    {
        auto f = gen.next();
        auto text = render( f );
        REQUIRE_MESSAGE( parse( text ) == f, text );
        CHECK( render( parse( text ) ) == text );
        auto c = godel_code( f );
        CHECK( decode( c ) == f );
        // Distinct formulas have distinct renderings, so the code sets must match in size.
        texts.insert( text );
        codes.insert( c );
        for ( auto& g : subformulas( f ) )
            if ( g != f )
                CHECK( godel_code( g ) < c );
    }
    CHECK( texts.size() == codes.size() );
}

TEST_CASE( "code order and decoding" )
{
    auto bb = Formula::box( Formula::bot() );
    CHECK( decode( godel_code( bb ) ) == bb );
    CHECK( godel_code( Formula::bot() ) < godel_code( bb ) );
    CHECK( godel_code( Formula::bot() ) == 1 );

    // Every number below 1000 either decodes to a formula coded by it or is a gap.
    int gaps = 0;
    for ( int n = 1; n < 1000; ++n )
    {
        auto f = decode( Code{ n } );
        if ( f )
            CHECK( godel_code( *f ) == n );
        else
            ++gaps;
    }
    CHECK( gaps > 0 );
    CHECK_FALSE( decode( Code{ 0 } ).has_value() );
    CHECK_FALSE( decode( godel_code( bb ) + 1 ).has_value() ); // "[]" followed by "~" is incomplete

    auto a = parse( "[]p & q" );
    auto b = parse( "[](p & q)" );
    CHECK( code_less( a, b ) == ( godel_code( a ) < godel_code( b ) ) );
    CHECK( code_less( b, a ) == ( godel_code( b ) < godel_code( a ) ) );
    CHECK( code_from_string( to_string( godel_code( b ) ) ) == godel_code( b ) );
    CHECK_THROWS_AS( (void)code_from_string( "12x" ), std::invalid_argument );

    auto t = parse( "lam(2) -> falsum", Namespace::Toy );
    CHECK( decode( godel_code( t, Namespace::Toy ), Namespace::Toy ) == t );
    CHECK_THROWS_AS( (void)godel_code( Formula::atom( "lam(1)" ) ), std::invalid_argument );
}

TEST_CASE( "code order enumeration agrees with decoding every number" )
{
    // Every formula with at most 3 symbols, by decoding all numbers in range.
    const unsigned K = alphabet_size( Namespace::Modal );
    const Code limit = Code{ K } * K * K + K * K + K;
    std::vector< Formula > decoded;
    for ( Code n = 1; n <= limit; ++n )
        if ( auto f = decode( n ) )
            decoded.push_back( *f );
    std::vector< Formula > walked;
    for_each_in_code_order( 3, [ & ]( const Formula& f ) {
        walked.push_back( f );
        return true;
    } );
    CHECK( walked == decoded );
}

TEST_CASE( "subformula closure" )
{
    auto bp = Formula::box( p() );
    CHECK( subformula_closure( bp ) == std::vector< Formula >{ p(), bp } );
    CHECK( subformula_closure( Formula::bot() ) == std::vector< Formula >{ Formula::bot() } );

    auto f = parse( "[]p -> []~p" );
    auto cl = subformula_closure( f );
    CHECK( cl.size() == 5 );
    CHECK( cl.back() == f );
    for ( auto& g : { p(), Formula::neg( p() ), bp, Formula::box( Formula::neg( p() ) ) } )
        CHECK( std::find( cl.begin(), cl.end(), g ) != cl.end() );
    for ( std::size_t n = 1; n < cl.size(); ++n )
        CHECK( godel_code( cl[ n - 1 ] ) < godel_code( cl[ n ] ) );
}

TEST_CASE( "formula structure helpers" )
{
    auto f = parse( "[](p & []q) | ~r" );
    CHECK( f.modal_depth() == 2 );
    CHECK( f.size() == 8 );
    CHECK( atoms_of( f ) == std::vector< std::string >{ "p", "q", "r" } );
    CHECK( occurs_in( parse( "[]q" ), f ) );
    CHECK_FALSE( occurs_in( parse( "[]p" ), f ) );
    Formula a, b;
    CHECK( parse( "p <-> q" ).as_iff( a, b ) );
    CHECK( ( a == p() && b == q() ) );
    CHECK_FALSE( parse( "(p -> q) & (q -> r)" ).as_iff( a, b ) );
    CHECK( std::hash< Formula >{}( parse( "p & q" ) ) == std::hash< Formula >{}( Formula::conj( p(), q() ) ) );
}

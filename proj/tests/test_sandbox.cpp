#include "oracles.hpp"
#include "scenarios.hpp"

#include "nwb/parser.hpp"
#include "nwb/sandbox.hpp"
#include "nwb/toy.hpp"
#include "nwb/verify.hpp"

#include <doctest.h>

using namespace nwb;

namespace
{

Formula toy( const char* s ) { return parse( s, Namespace::Toy ); }
Stage code( const Formula& f ) { return godel_code( f, Namespace::Toy ); }

// Two entries: worlds {1,2} with N(1) = {W, {1}}, N(2) = {W}, v(p) = {1};
// and world {3} with N(3) = {{3}}, v(p) = {}.
std::shared_ptr< Catalog > small_catalog()
{
    auto cat = std::make_shared< Catalog >();
    cat->logic = Logic::EN;
    CatalogEntry e0;
    e0.k = 0;
    e0.formula = parse( "p" );
    e0.model = Model{ Frame{ { 1, 2 }, { { 1, { { 1, 2 }, { 1 } } }, { 2, { { 1, 2 } } } } }, { { "p", { 1 } } } };
    e0.witness = 2;
    e0.lo = 1;
    e0.hi = 2;
    CatalogEntry e1;
    e1.k = 1;
    e1.formula = parse( "p" );
    e1.model = Model{ Frame{ { 3 }, { { 3, { { 3 } } } } }, { { "p", {} } } };
    e1.witness = 3;
    e1.lo = 3;
    e1.hi = 3;
    cat->entries = { e0, e1 };
    return cat;
}

bool contains( const std::vector< Formula >& v, const Formula& f ) { return std::find( v.begin(), v.end(), f ) != v.end(); }

} // namespace

TEST_CASE( "tautological consequence" )
{
    CHECK( taut_consequence( { toy( "a" ), toy( "a -> b" ) }, toy( "b" ) ) );
    CHECK_FALSE( taut_consequence( {}, toy( "~falsum" ) ) );
    CHECK( taut_consequence( { toy( "lam(3) -> falsum" ), toy( "~falsum" ) }, toy( "~lam(3)" ) ) );
    CHECK( test::table_entails( { toy( "lam(3) -> falsum" ), toy( "~falsum" ) }, toy( "~lam(3)" ) ) );
    CHECK_FALSE( taut_consequence( { toy( "pr(a)" ) }, toy( "a" ) ) );
}

TEST_CASE( "equivalence chains" )
{
    CHECK( equiv_m( {}, toy( "a" ), toy( "a" ) ) );
    CHECK( equiv_m( { toy( "a <-> b" ) }, toy( "a" ), toy( "b" ) ) );
    CHECK( equiv_m( { toy( "a <-> b" ) }, toy( "b" ), toy( "a" ) ) );
    CHECK( equiv_m( { toy( "a <-> b" ), toy( "b <-> c" ) }, toy( "a" ), toy( "c" ) ) );
    CHECK_FALSE( equiv_m( { toy( "a <-> b" ) }, toy( "a" ), toy( "c" ) ) );
    // Only members of P count, not their consequences.
    CHECK_FALSE( equiv_m( { toy( "(a <-> b) & c" ) }, toy( "a" ), toy( "b" ) ) );
}

TEST_CASE( "proof entries" )
{
    Scenario sc;
    sc.axioms = { toy( "a" ) };
    sc.inject = { { 5, toy( "lam(2) -> b" ) } };
    sc.schedule = { { code( toy( "a | c" ) ) + 7, toy( "a | c" ) } };
    auto es = proof_entries( sc );
    REQUIRE( es.size() == 4 );
    CHECK( es[ 0 ].formula == toy( "~falsum" ) ); // smallest code first
    CHECK( es[ 1 ].formula == toy( "a" ) );
    for ( auto& e : es )
    {
        CHECK( e.stage == std::max( e.declared, code( e.formula ) ) );
        if ( e.source == ProofEntry::Source::Inject )
            CHECK( e.declared == 5 );
    }
    for ( std::size_t n = 1; n < es.size(); ++n )
        CHECK( es[ n - 1 ].stage <= es[ n ].stage );
}

TEST_CASE( "ill-formed scenarios" )
{
    Scenario clash;
    clash.inject = { { 100, toy( "a" ) }, { 100, toy( "b" ) } };
    CHECK_THROWS_AS( (void)proof_entries( clash ), ScenarioError );
    Scenario same;
    same.inject = { { 100, toy( "a" ) }, { 100, toy( "a" ) } };
    CHECK_NOTHROW( (void)proof_entries( same ) );
    Scenario clash2;
    clash2.inject = { { 100, toy( "a" ) } };
    clash2.schedule = { { 100, toy( "a | b" ) } };
    CHECK_THROWS_AS( (void)proof_entries( clash2 ), ScenarioError );

    Scenario unjustified;
    unjustified.schedule = { { 10, toy( "a" ) } };
    CHECK_THROWS_AS( (void)proof_entries( unjustified ), ScenarioError );
    Scenario too_early;
    too_early.inject = { { 50, toy( "a" ) } };
    too_early.schedule = { { 10, toy( "a | b" ) } };
    CHECK_THROWS_AS( (void)proof_entries( too_early ), ScenarioError );
    too_early.schedule = { { 50, toy( "a" ) } };
    CHECK_NOTHROW( (void)proof_entries( too_early ) );

    Scenario bad_atom;
    bad_atom.axioms = { Formula::atom( "lam(0)" ) };
    CHECK_THROWS_AS( (void)proof_entries( bad_atom ), ScenarioError );
    Scenario negative;
    negative.inject = { { -1, toy( "a" ) } };
    CHECK_THROWS_AS( (void)proof_entries( negative ), ScenarioError );
}

TEST_CASE( "h without lam facts never fires" )
{
    Scenario sc;
    sc.axioms = { toy( "a" ), toy( "a -> b" ) };
    sc.schedule = { { 1000000000000000000, toy( "b" ) } };
    auto ht = run_h( sc );
    CHECK_FALSE( ht.trigger.has_value() );
    for ( auto& [ s, J ] : ht.J )
        CHECK( J.empty() );
    CHECK( ht.h( 0 ) == 0 );
    CHECK( ht.h( ht.horizon ) == 0 );
}

TEST_CASE( "h fires at the least refuted lam" )
{
    const Stage n = 12345;
    Scenario one;
    one.inject = { { n, toy( "~lam(5)" ) } };
    auto ht = run_h( one );
    REQUIRE( ht.trigger );
    CHECK( ht.trigger->i == 5 );
    CHECK( ht.trigger->s == std::max( n, code( toy( "~lam(5)" ) ) ) );
    CHECK( ht.h( ht.trigger->s ) == 0 );
    CHECK( ht.h( ht.trigger->s + 1 ) == 5 );
    CHECK( ht.h( ht.trigger->s * 2 ) == 5 );

    Scenario both;
    both.inject = { { n, toy( "~lam(5) & ~lam(2)" ) } };
    ht = run_h( both );
    REQUIRE( ht.trigger );
    CHECK( ht.trigger->i == 2 );
    CHECK( ht.J.at( ht.trigger->s ).members == std::vector< int >{ 2, 5 } );

    // Each refutation arriving separately: the earlier one wins.
    Scenario apart;
    apart.inject = { { code( toy( "~lam(5)" ) ), toy( "~lam(5)" ) }, { code( toy( "~lam(5)" ) ) * 2, toy( "~lam(2)" ) } };
    ht = run_h( apart );
    REQUIRE( ht.trigger );
    CHECK( ht.trigger->i == 5 );

    Scenario indirect;
    indirect.axioms = { toy( "a" ) };
    indirect.inject = { { 10, toy( "lam(3) -> ~a" ) } };
    ht = run_h( indirect );
    REQUIRE( ht.trigger );
    CHECK( ht.trigger->i == 3 );
}

TEST_CASE( "an inconsistent theory fires with 1" )
{
    Scenario sc;
    sc.inject = { { 0, toy( "falsum" ) } };
    auto ht = run_h( sc );
    REQUIRE( ht.trigger );
    CHECK( ht.trigger->i == 1 );
    CHECK( ht.J.at( ht.trigger->s ).all );
}

TEST_CASE( "h respects an explicit horizon" )
{
    Scenario sc;
    sc.inject = { { 12345, toy( "~lam(5)" ) } };
    sc.horizon = Stage{ 100 };
    auto ht = run_h( sc );
    CHECK_FALSE( ht.trigger );
}

TEST_CASE( "untriggered runs output the proof schedule" )
{
    Scenario sc;
    sc.axioms = { toy( "a" ) };
    sc.schedule = { { 999999999999, toy( "a | b" ) } };
    auto cat = small_catalog();
    for ( auto v : { Variant::G0, Variant::G1 } )
    {
        auto t = run_g( v, sc, cat );
        CHECK_FALSE( t.triggered() );
        CHECK( t.output == proved_up_to( t.entries, t.htrace.horizon ) );
        CHECK( t.in_output( toy( "a | b" ) ) );
        CHECK_FALSE( t.in_output( toy( "b" ) ) );
        CHECK( verify_run( t, Check::E ).status == Status::Pass );
        CHECK( verify_run( t, Check::C ).status == ( v == Variant::G0 ? Status::NotClaimed : Status::NotApplicable ) );
        CHECK( verify_run( t, Check::ECN4 ).status == Status::NotApplicable );
    }
}

TEST_CASE( "procedure 2 sets" )
{
    auto cat = small_catalog();
    std::vector< Formula > P{ toy( "~falsum" ), toy( "lam(1) -> c" ), toy( "lam(2) -> ~c" ), toy( "c <-> d" ),
                              toy( "lam(1) -> e" ), toy( "lam(2) -> e" ) };
    Procedure2 at1( Variant::G0, *cat, Trigger{ 1000000, 1 }, P );
    CHECK( at1.k == 0 );
    CHECK( at1.in_y( toy( "c" ) ) ); // pattern {1} is in N(1)
    CHECK( at1.in_y( toy( "d" ) ) ); // by the biconditional
    CHECK( at1.in_y( toy( "e" ) ) ); // pattern W
    CHECK( at1.in_x( toy( "~falsum" ) ) );
    CHECK_FALSE( at1.in_x( toy( "c" ) ) );
    CHECK( at1.edges().size() == 1 );

    Procedure2 at2( Variant::G0, *cat, Trigger{ 1000000, 2 }, P );
    CHECK_FALSE( at2.in_y( toy( "c" ) ) ); // N(2) = {W}
    CHECK( at2.in_y( toy( "e" ) ) );

    Procedure2 empty( Variant::G1, *cat, Trigger{ 1000000, 1 }, {} );
    CHECK( empty.X.empty() );
    CHECK( empty.Y.empty() );
    CHECK( empty.z_levels().empty() );

    CHECK_THROWS_AS( Procedure2( Variant::G0, *cat, Trigger{ 10, 9 }, P ), ScenarioError );
}

TEST_CASE( "Z is closed under conjunction below the stage" )
{
    auto cat = small_catalog();
    std::vector< Formula > P{ toy( "a" ), toy( "b" ), toy( "a & b <-> c" ) };
    Stage s = 0;
    for ( auto& f : P )
        s = std::max( s, code( f ) + 1 );
    Procedure2 z( Variant::G1, *cat, Trigger{ s, 1 }, P );
    CHECK( z.in_z( toy( "a & b" ) ) );
    CHECK( z.in_z( toy( "c" ) ) ); // equivalent to a conjunction of members
    CHECK( z.z_level( toy( "c" ) ) == 1 );
    CHECK( z.in_z( toy( "b & a" ) ) );
    CHECK_FALSE( z.in_z( toy( "a | b" ) ) );
    for ( auto& [ f, level ] : z.z_levels() )
        CHECK( code( f ) <= z.bound );

    // Every conjunction tree over a and b belongs to Z exactly when its code
    // fits below the stage.
    Procedure2 y( Variant::G1, *cat, Trigger{ code( toy( "(a & b) & (b & a)" ) ), 1 }, { toy( "a" ), toy( "b" ) } );
    std::vector< std::vector< Formula > > trees( 6 );
    trees[ 1 ] = { toy( "a" ), toy( "b" ) };
    for ( int n = 2; n < 6; ++n )
        for ( int l = 1; l < n; ++l )
            for ( auto& x : trees[ l ] )
                for ( auto& y : trees[ n - l ] )
                    trees[ n ].push_back( Formula::conj( x, y ) );
    int inside = 0, outside = 0;
    for ( auto& level : trees )
        for ( auto& f : level )
        {
            const bool fits = code( f ) <= y.bound;
            ( fits ? inside : outside ) += 1;
            CHECK_MESSAGE( y.in_z( f ) == fits, render( f, Namespace::Toy ) );
        }
    CHECK( inside > 10 );
    CHECK( outside > 10 );
}

TEST_CASE( "interpretation" )
{
    auto cat = small_catalog();
    CHECK( interpret( *cat, parse( "p" ) ) == lam( 1 ) );
    CHECK( interpret( *cat, parse( "false" ) ) == falsum() );
    CHECK( interpret( *cat, parse( "~p" ) ) == Formula::neg( lam( 1 ) ) );
    CHECK( interpret( *cat, parse( "p & p" ) ) == Formula::conj( lam( 1 ), lam( 1 ) ) );
    CHECK( interpret( *cat, parse( "[]p" ) ) == toy( "pr(lam(1))" ) );
    CHECK_THROWS_AS( (void)interpret( *cat, parse( "q" ) ), std::invalid_argument );

    cat->entries[ 1 ].model.val[ "p" ] = { 3 };
    CHECK( interpret( *cat, parse( "p" ) ) == toy( "lam(1) | lam(3)" ) );
}

TEST_CASE( "truth lemma seeding" )
{
    auto cat = small_catalog();
    auto bp = parse( "[]p" );

    auto sc = seed_truth_lemma( {}, *cat, 0, 1, { bp } );
    auto t = run_g( Variant::G0, sc, cat );
    REQUIRE( t.triggered() );
    CHECK( t.htrace.trigger->i == 1 );
    CHECK( t.phase2->in_y( lam( 1 ) ) ); // v(p) = {1} is in N(1)
    CHECK( verify_truth_lemma( t, 0, 1, { bp } ).status == Status::Pass );

    sc = seed_truth_lemma( {}, *cat, 0, 2, { bp } );
    for ( auto v : { Variant::G0, Variant::G1 } )
    {
        t = run_g( v, sc, cat );
        REQUIRE( t.triggered() );
        CHECK( t.htrace.trigger->i == 2 );
        CHECK_FALSE( t.in_output( lam( 1 ) ) ); // {1} is not in N(2)
        CHECK( verify_truth_lemma( t, 0, 2, { bp } ).status == Status::Pass );
    }

    // Without boxes only the lam facts are seeded.
    sc = seed_truth_lemma( {}, *cat, 0, 2, { parse( "p" ) } );
    std::vector< Formula > seeds;
    for ( auto& [ s, f ] : sc.inject )
        seeds.push_back( f );
    CHECK( seeds == std::vector< Formula >{ toy( "lam(1) -> lam(1)" ), toy( "lam(2) -> ~lam(1)" ), toy( "~lam(2)" ) } );

    // Seeds precede the trigger and existing injections move past them.
    Scenario base;
    base.inject = { { 7, toy( "a" ) } };
    sc = seed_truth_lemma( base, *cat, 0, 1, { bp } );
    auto ht = run_h( sc );
    REQUIRE( ht.trigger );
    for ( auto& e : proof_entries( sc ) )
        if ( e.formula != Formula::neg( lam( 1 ) ) )
            CHECK( e.stage < ht.trigger->s );

    base.horizon = Stage{ 3 };
    CHECK_THROWS_AS( (void)seed_truth_lemma( base, *cat, 0, 1, { bp } ), ScenarioError );
    CHECK_THROWS_AS( (void)seed_truth_lemma( {}, *cat, 0, 3, { bp } ), ScenarioError );
    CHECK_THROWS_AS( (void)seed_truth_lemma( {}, *cat, 5, 1, { bp } ), ScenarioError );
}

TEST_CASE( "claims on triggered runs" )
{
    for ( auto l : all_logics )
    {
        CAPTURE( name( l ) );
        auto cat = std::make_shared< Catalog >( build_catalog( l, 3 ) );
        std::vector< Formula > battery{ parse( "[]false" ), parse( "[]~false" ), parse( "[][]false" ) };
        for ( auto v : { Variant::G0, Variant::G1 } )
        {
            auto sc = seed_truth_lemma( {}, *cat, 1, cat->entries[ 1 ].lo, battery );
            auto t = run_g( v, sc, cat );
            REQUIRE( t.triggered() );
            CHECK( verify_run( t, Check::E ).status == Status::Pass );
            CHECK( verify_run( t, Check::ConL ).status == Status::Pass );
            CHECK( verify_run( t, Check::ConS ).status == Status::Pass );
            if ( v == Variant::G1 )
            {
                CHECK( verify_run( t, Check::C ).status == Status::Pass );
                CHECK( verify_run( t, Check::ECN4 ).status == Status::Pass );
            }
            else
                CHECK( verify_run( t, Check::ECN4 ).status == Status::NotClaimed );
            CHECK( verify_truth_lemma( t, 1, cat->entries[ 1 ].lo, battery ).status == Status::Pass );
            CHECK_THROWS_AS( (void)verify_run( t, Check::TruthLemma ), std::invalid_argument );
        }
    }
}

TEST_CASE( "an adversarial EN scenario fires before the clash" )
{
    auto cat = std::make_shared< Catalog >( build_catalog( Logic::EN, 3 ) );
    Scenario sc;
    const Stage t1 = code( toy( "~a" ) ) + 10;
    sc.inject = { { t1, toy( "a" ) }, { t1 + 5, toy( "~a" ) } };
    auto t = run_g( Variant::G0, sc, cat );
    REQUIRE( t.triggered() );
    CHECK( t.htrace.trigger->s == t1 + 5 );
    CHECK( t.htrace.trigger->i == 1 );
    CHECK( t.htrace.J.at( t1 + 5 ).all );
    CHECK_FALSE( contains( t.phase2->P, toy( "~a" ) ) );
    CHECK( verify_run( t, Check::ConS ).status == Status::Pass );
    CHECK( verify_run( t, Check::ConL ).status == Status::Pass );
}

TEST_CASE( "checks detect broken traces" )
{
    auto cat = small_catalog();
    // falsum scripted as a theorem before the trigger: ConL must fail.
    Scenario sc;
    sc.axioms = { toy( "falsum | a" ) };
    sc.inject = { { 0, toy( "a -> falsum" ) } };
    auto t = run_g( Variant::G0, sc, cat );
    REQUIRE( t.triggered() );
    // The inconsistency makes h fire with 1 at the stage falsum becomes derivable,
    // and falsum itself is not in P(s-1).
    CHECK( verify_run( t, Check::ConL ).status == Status::Pass );

    Scenario direct;
    direct.inject = { { 0, toy( "falsum" ) } };
    direct.horizon = Stage{ 0 };
    auto u = run_g( Variant::G0, direct, cat );
    CHECK_FALSE( u.triggered() ); // the horizon stops before the falsum proof takes effect
    CHECK( verify_run( u, Check::ConL ).status == Status::Pass );
}

TEST_CASE( "random scenarios keep the h invariants" )
{
    for ( std::uint64_t seed = 1; seed <= 20; ++seed )
    {
        CAPTURE( seed );
        auto sc = test::random_scenario( seed );
        auto ht = run_h( sc );
        auto entries = proof_entries( sc );
        auto P = proved_up_to( entries, ht.horizon );
        bool consistent = !test::table_entails( P, Formula::bot() );
        bool refutes = !consistent;
        std::set< int > lams;
        for ( auto& f : P )
            for ( int j : lam_indices( f ) )
                lams.insert( j );
        for ( int j : lams )
            refutes = refutes || test::table_entails( P, Formula::neg( lam( j ) ) );
        CHECK( ht.trigger.has_value() == refutes );
        if ( ht.trigger )
            CHECK( Stage{ ht.trigger->i } <= ht.trigger->s + 1 );
    }
}

#include "nwb/verify.hpp"

#include "nwb/parser.hpp"
#include "nwb/propositional.hpp"
#include "nwb/toy.hpp"

#include <stdexcept>

namespace nwb
{

namespace
{

constexpr std::pair< Check, std::string_view > check_names[] = {
    { Check::E, "E" },       { Check::C, "C" },       { Check::ConL, "ConL" },
    { Check::ConS, "ConS" }, { Check::ECN4, "ECN4" }, { Check::TruthLemma, "TruthLemma" },
};

std::string show( const Formula& f ) { return render( f, Namespace::Toy ); }

CheckReport check_e( const GTrace& t )
{
    CheckReport r{ Check::E, Status::Pass, {} };
    if ( !t.triggered() )
    {
        // Consistent branch: the predicate is the proof schedule itself.
        std::unordered_set< Formula, FormulaHash > proved;
        for ( auto& e : t.entries )
            if ( e.stage <= t.htrace.horizon )
                proved.insert( e.formula );
        std::unordered_set< Formula, FormulaHash > listed( t.output.begin(), t.output.end() );
        r.examined = proved.size();
        if ( proved != listed )
        {
            r.status = Status::Fail;
            r.detail = "output differs from the proof schedule";
        }
        else
            r.detail = "untriggered: output is exactly the proof schedule";
        return r;
    }
    for ( auto& [ a, b ] : t.phase2->edges() )
    {
        ++r.examined;
        if ( t.in_output( a ) != t.in_output( b ) )
        {
            r.status = Status::Fail;
            r.detail = show( a ) + " and " + show( b ) + " are provably equivalent but only one is output";
            return r;
        }
    }
    r.detail = std::to_string( r.examined ) + " biconditionals respected";
    return r;
}

CheckReport check_c( const GTrace& t )
{
    CheckReport r{ Check::C, Status::Pass, {} };
    if ( t.variant == Variant::G0 )
        return { Check::C, Status::NotClaimed, "g0 makes no conjunction claim" };
    if ( !t.triggered() )
        return { Check::C, Status::NotApplicable, "untriggered: output is the proof schedule" };
    const auto& p2 = *t.phase2;
    const auto& z = p2.z_levels();
    for ( auto& [ a, la ] : z )
        for ( auto& [ b, lb ] : z )
        {
            auto ab = Formula::conj( a, b );
            if ( godel_code( ab, Namespace::Toy ) > p2.bound )
                continue;
            ++r.examined;
            if ( !t.in_output( ab ) )
            {
                r.status = Status::Fail;
                r.detail = show( a ) + " and " + show( b ) + " are output but their conjunction is not";
                return r;
            }
        }
    r.detail = std::to_string( r.examined ) + " conjunctions below the trigger stage are output";
    return r;
}

CheckReport check_conl( const GTrace& t )
{
    CheckReport r{ Check::ConL, Status::Pass, {}, 1 };
    if ( t.in_output( falsum() ) )
    {
        r.status = Status::Fail;
        r.detail = "falsum is output";
    }
    else
        r.detail = "falsum is not output";
    return r;
}

CheckReport check_cons( const GTrace& t )
{
    CheckReport r{ Check::ConS, Status::Pass, {} };
    for ( auto& f : t.output )
    {
        ++r.examined;
        bool clash = t.in_output( Formula::neg( f ) ) || ( f.is( Op::Not ) && t.in_output( f.child() ) );
        if ( clash )
        {
            r.status = Status::Fail;
            r.detail = show( f ) + " is output together with its negation";
            return r;
        }
    }
    r.detail = "no output formula has its negation output";
    return r;
}

CheckReport check_ecn4( const GTrace& t )
{
    if ( !t.triggered() )
        return { Check::ECN4, Status::NotApplicable, "untriggered run" };
    if ( t.variant == Variant::G0 )
        return { Check::ECN4, Status::NotClaimed, "Z is only built by g1" };
    const auto& p2 = *t.phase2;
    const auto& entry = t.catalog->entries[ p2.k ];
    const WorldSet& W = entry.model.frame.worlds;
    const Family& Ni = entry.model.frame.N.at( p2.trigger.i );

    PropSolver solver;
    for ( auto& f : p2.P )
        solver.add( f );

    CheckReport r{ Check::ECN4, Status::Pass, {} };
    for ( auto& [ rho, level ] : p2.z_levels() )
    {
        ++r.examined;
        WorldSet pos, neg;
        for ( World j : W )
        {
            if ( !solver.satisfiable( { lam( j ), Formula::neg( rho ) } ) )
                pos.insert( j );
            if ( !solver.satisfiable( { lam( j ), rho } ) )
                neg.insert( j );
        }
        bool found = false;
        for ( auto& V : Ni )
        {
            bool ok = std::includes( pos.begin(), pos.end(), V.begin(), V.end() );
            for ( World j : W )
                if ( ok && !V.count( j ) && !neg.count( j ) )
                    ok = false;
            if ( ok )
            {
                found = true;
                break;
            }
        }
        if ( !found )
        {
            r.status = Status::Fail;
            r.detail = "no V in N(" + std::to_string( p2.trigger.i ) + ") fits Z member " + show( rho ) + " (level " +
                       std::to_string( level ) + ")";
            return r;
        }
    }
    r.detail = "every listed Z member has a witness";
    return r;
}

} // namespace

std::string_view name( Check c )
{
    for ( auto& [ k, s ] : check_names )
        if ( k == c )
            return s;
    return "?";
}

std::optional< Check > check_from_name( std::string_view s )
{
    for ( auto& [ k, n ] : check_names )
        if ( n == s )
            return k;
    return std::nullopt;
}

std::string_view name( Status s )
{
    switch ( s )
    {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::NotClaimed:
        return "not_claimed";
    case Status::NotApplicable:
        return "not_applicable";
    }
    return "?";
}

CheckReport verify_run( const GTrace& t, Check c )
{
    switch ( c )
    {
    case Check::E:
        return check_e( t );
    case Check::C:
        return check_c( t );
    case Check::ConL:
        return check_conl( t );
    case Check::ConS:
        return check_cons( t );
    case Check::ECN4:
        return check_ecn4( t );
    case Check::TruthLemma:
        break;
    }
    throw std::invalid_argument( "the truth lemma check needs an entry, a world and a battery" );
}

bool trace_value( const GTrace& t, int i, const Formula& toy )
{
    switch ( toy.op() )
    {
    case Op::Bot:
        return false;
    case Op::Atom: {
        auto j = lam_index( toy );
        return j && *j == i;
    }
    case Op::Not:
        return !trace_value( t, i, toy.child() );
    case Op::And:
        return trace_value( t, i, toy.lhs() ) && trace_value( t, i, toy.rhs() );
    case Op::Or:
        return trace_value( t, i, toy.lhs() ) || trace_value( t, i, toy.rhs() );
    case Op::Imp:
        return !trace_value( t, i, toy.lhs() ) || trace_value( t, i, toy.rhs() );
    case Op::Box:
        return t.in_output( toy.child() );
    }
    return false;
}

CheckReport verify_truth_lemma( const GTrace& t, int k, int i, const std::vector< Formula >& battery )
{
    CheckReport r{ Check::TruthLemma, Status::Fail, {} };
    if ( !t.triggered() || t.htrace.trigger->i != i )
    {
        r.detail = "the run did not fire at world " + std::to_string( i );
        return r;
    }
    if ( k < 0 || static_cast< std::size_t >( k ) >= t.catalog->entries.size() || t.phase2->k != k )
    {
        r.detail = "world " + std::to_string( i ) + " does not belong to entry " + std::to_string( k );
        return r;
    }
    const auto& model = t.catalog->entries[ k ].model;
    for ( auto& B : battery )
    {
        ++r.examined;
        bool expected = eval( model, i, B );
        bool actual = trace_value( t, i, interpret( *t.catalog, B ) );
        if ( expected != actual )
        {
            r.detail = render( B ) + " is " + ( expected ? "true" : "false" ) + " at world " + std::to_string( i ) +
                       " but its interpretation is " + ( actual ? "true" : "false" ) + " in the run";
            return r;
        }
    }
    r.status = Status::Pass;
    r.detail = std::to_string( r.examined ) + " formulas agree at world " + std::to_string( i );
    return r;
}

} // namespace nwb
